#include "core/families.hpp"

#include "core/error.hpp"
#include "core/regex.hpp"

namespace ans {

namespace {

constexpr std::string_view kDigits = "0123456789abcdefghijklmnopqrstuvwxyz";
constexpr std::string_view kBlockLetters = "0123456789ABCDEFGHIJKLMNOPQRSTUV";

SystemSpec make(std::string name, const std::string& letters, std::string language,
                std::string set = {}) {
  SystemSpec s;
  s.name = std::move(name);
  s.alphabet = OrderedAlphabet(letters);
  s.language.dfa = parse_regex(language, s.alphabet);
  s.language.regex = std::move(language);
  if (!set.empty()) {
    LanguageSource x;
    x.dfa = parse_regex(set, s.alphabet);
    x.regex = std::move(set);
    s.set = std::move(x);
  }
  return s;
}

std::string alternation(std::string_view letters) {
  std::string r = "(";
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) r += '|';
    r += letters[i];
  }
  return r + ")";
}

std::string bounded_regex(int l) {
  std::string r;
  for (int i = 0; i < l; ++i) r += std::string(1, static_cast<char>('a' + i)) + "*";
  return r;
}

// Words over `block` with at most k occurrences of the separator `sep`.
std::string at_most_separators(const std::string& block, char sep, int k) {
  std::string e = block + "*";
  for (int i = 0; i < k; ++i) e = block + "* (" + sep + " " + e + ")?";
  return e;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorKind::InvalidArgument, message);
}

}  // namespace

SystemSpec base_b(int b) {
  require(b >= 2 && b <= 36, "base must be between 2 and 36");
  const std::string digits(kDigits.substr(0, static_cast<std::size_t>(b)));
  return make("base" + std::to_string(b), digits,
              "eps | " + alternation(digits.substr(1)) + alternation(digits) + "*");
}

SystemSpec unary() { return make("unary", "a", "a*", "a*"); }

SystemSpec bounded(int l) {
  require(l >= 1 && l <= 26, "bounded(l) needs 1 <= l <= 26");
  std::string letters;
  for (int i = 0; i < l; ++i) letters += static_cast<char>('a' + i);
  return make("bounded" + std::to_string(l), letters, bounded_regex(l));
}

SystemSpec fibonacci() { return make("fibonacci", "01", "eps | 1(0|01)*"); }

SystemSpec squares_system() { return make("squares", "abc", "a*b* | a*c*", "a*"); }

SystemSpec rational_power(int c, int d) {
  require(d >= 1 && c >= d && c <= 26, "rational_power(c, d) needs c >= d >= 1");
  std::string letters;
  for (int i = 0; i < c; ++i) letters += static_cast<char>('a' + i);
  return make("rational_power_" + std::to_string(c) + "_" + std::to_string(d), letters,
              bounded_regex(c), bounded_regex(d));
}

SystemSpec logpoly(int k, int l) {
  require(k >= 0 && k <= 16, "logpoly(k, l) needs 0 <= k <= 16");
  require(l >= 1 && l <= 5, "logpoly(k, l) needs 1 <= l <= 5");
  const std::string block(kBlockLetters.substr(0, std::size_t{1} << l));
  const std::string letters = block + "sxy";
  const std::string l1 = at_most_separators(alternation(block), 's', k);
  return make("logpoly_" + std::to_string(k) + "_" + std::to_string(l), letters,
              l1 + " | (x|y)*", "(x|y)*");
}

SystemSpec inverse_logpoly(int k, int l) {
  require(k >= 1 && k <= 16, "inverse_logpoly(k, l) needs 1 <= k <= 16");
  require(l >= 2 && l <= 5, "inverse_logpoly(k, l) needs 2 <= l <= 5");
  const int d = (k + l - 2) / (l - 1);
  const int c = l * d - k;
  const std::string block(kBlockLetters.substr(0, std::size_t{1} << l));
  const std::string letters = block + "sxyz";
  const std::string l1 = at_most_separators(alternation(block), 's', c);
  std::string l2 = "(x|y)*";
  for (int i = 0; i < d; ++i) l2 += " z (x|y)*";
  return make("inverse_logpoly_" + std::to_string(k) + "_" + std::to_string(l), letters,
              l1 + " | " + l2, l2);
}

SystemSpec construct_family(const std::string& family, const std::vector<long>& params) {
  auto arity = [&](std::size_t n) {
    require(params.size() == n, family + " takes " + std::to_string(n) + " parameter(s)");
  };
  auto p = [&](std::size_t i) {
    require(params[i] >= -1000 && params[i] <= 1000, "parameter out of range");
    return static_cast<int>(params[i]);
  };
  if (family == "base") {
    arity(1);
    return base_b(p(0));
  }
  if (family == "unary") {
    arity(0);
    return unary();
  }
  if (family == "bounded") {
    arity(1);
    return bounded(p(0));
  }
  if (family == "fibonacci") {
    arity(0);
    return fibonacci();
  }
  if (family == "squares") {
    arity(0);
    return squares_system();
  }
  if (family == "rational_power") {
    arity(2);
    return rational_power(p(0), p(1));
  }
  if (family == "logpoly") {
    arity(2);
    return logpoly(p(0), p(1));
  }
  if (family == "inverse_logpoly") {
    arity(2);
    return inverse_logpoly(p(0), p(1));
  }
  throw Error(ErrorKind::InvalidArgument, "unknown family '" + family + "'");
}

}  // namespace ans
