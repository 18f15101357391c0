#include "core/numeration.hpp"

#include "core/error.hpp"

namespace ans {

namespace {

// Smallest length l with v(l) > n, or nullopt if no such length exists.
std::optional<std::size_t> length_for(const CountTable& counts, const BigInt& n) {
  const Dfa& d = counts.dfa();
  if (d.empty()) return std::nullopt;
  const bool infinite = is_infinite(d);
  // A finite language has no word longer than the number of states.
  const std::size_t cap = infinite ? SIZE_MAX : d.num_states();
  std::size_t hi = 0;
  while (counts.v(static_cast<long>(hi)) <= n) {
    if (hi >= cap) return std::nullopt;
    hi = hi == 0 ? 1 : std::min(cap, 2 * hi);
  }
  std::size_t lo = hi / 2;  // v(lo) <= n unless lo == hi == 0
  if (hi == 0) return 0;
  while (lo + 1 < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (counts.v(static_cast<long>(mid)) <= n) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return counts.v(static_cast<long>(lo)) > n ? lo : hi;
}

}  // namespace

std::optional<std::string> unrank(const CountTable& counts, const BigInt& n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "index must be nonnegative");
  auto len = length_for(counts, n);
  if (!len) return std::nullopt;
  const Dfa& d = counts.dfa();
  BigInt k = n - counts.v(static_cast<long>(*len) - 1);
  std::string word;
  word.reserve(*len);
  State q = d.initial();
  for (std::size_t remaining = *len; remaining > 0; --remaining) {
    bool moved = false;
    for (std::size_t a = 0; a < d.num_letters(); ++a) {
      State t = d.next(q, a);
      if (t == kNoState) continue;
      const BigInt& c = counts.N(t, remaining - 1);
      if (k < c) {
        word.push_back(d.alphabet().letter(a));
        q = t;
        moved = true;
        break;
      }
      k -= c;
    }
    if (!moved) throw Error(ErrorKind::InvalidArgument, "count table inconsistent with automaton");
  }
  return word;
}

BigInt rank(const CountTable& counts, std::string_view word) {
  const Dfa& d = counts.dfa();
  BigInt r = counts.v(static_cast<long>(word.size()) - 1);
  if (d.empty()) return r;
  State q = d.initial();
  for (std::size_t i = 0; i < word.size(); ++i) {
    auto letter = d.alphabet().index_of(word[i]);
    if (!letter) throw Error(ErrorKind::InvalidArgument, std::string("letter '") + word[i] + "' is not in the alphabet");
    const std::size_t remaining = word.size() - i - 1;
    for (std::size_t b = 0; b < *letter; ++b) {
      State t = d.next(q, b);
      if (t != kNoState) r += counts.N(t, remaining);
    }
    q = d.next(q, *letter);
    if (q == kNoState) break;
  }
  return r;
}

int genealogic_compare(std::string_view a, std::string_view b, const OrderedAlphabet& alphabet) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    auto x = alphabet.index_of(a[i]);
    auto y = alphabet.index_of(b[i]);
    if (!x || !y) throw Error(ErrorKind::InvalidArgument, "letter not in the alphabet");
    return *x < *y ? -1 : 1;
  }
  return 0;
}

NumerationSystem::NumerationSystem(const Dfa& language) {
  Dfa m = minimize(language);
  if (m.empty()) throw Error(ErrorKind::EmptyLanguage, "the numeration language is empty");
  if (!is_infinite(m)) throw Error(ErrorKind::FiniteLanguage, "the numeration language is finite");
  dfa_ = std::make_shared<const Dfa>(m);
  counts_ = std::make_shared<const CountTable>(std::move(m));
}

std::string NumerationSystem::rep(const BigInt& n) const {
  auto w = unrank(*counts_, n);
  if (!w) throw Error(ErrorKind::OutOfRange, "rep undefined");  // unreachable: L infinite
  return *w;
}

BigInt NumerationSystem::val(std::string_view w) const {
  for (char c : w) {
    if (!alphabet().contains(c)) {
      throw Error(ErrorKind::RejectedWord, std::string("letter '") + c + "' is not in the alphabet");
    }
  }
  if (!dfa_->accepts(w)) {
    throw Error(ErrorKind::RejectedWord, "word '" + std::string(w) + "' is not in the numeration language");
  }
  return rank(*counts_, w);
}

RecognizableSet::RecognizableSet(NumerationSystem system, const Dfa& rep) : system_(std::move(system)) {
  Dfa r = rep.empty() ? Dfa(system_.alphabet(), 0, kNoState) : rep;
  if (!(r.alphabet() == system_.alphabet())) {
    for (char c : r.alphabet().letters()) {
      if (!system_.alphabet().contains(c)) {
        throw Error(ErrorKind::NotSubset, std::string("set letter '") + c + "' is not in the alphabet");
      }
    }
    r = widen_alphabet(r, system_.alphabet());
  }
  r = minimize(r);
  if (!is_subset(r, system_.dfa())) {
    throw Error(ErrorKind::NotSubset, "rep_S(X) is not contained in the numeration language");
  }
  rep_ = std::make_shared<const Dfa>(r);
  counts_ = std::make_shared<const CountTable>(std::move(r));
}

RecognizableSet RecognizableSet::intersecting(NumerationSystem system, const Dfa& d) {
  Dfa widened = d.alphabet() == system.alphabet() ? d : widen_alphabet(d, system.alphabet());
  Dfa meet = product(widened, system.dfa(), both_final);
  return RecognizableSet(std::move(system), meet);
}

RecognizableSet RecognizableSet::natural(NumerationSystem system) {
  Dfa l = system.dfa();
  return RecognizableSet(std::move(system), l);
}

bool RecognizableSet::is_infinite() const { return ans::is_infinite(*rep_); }

BigInt RecognizableSet::t(const BigInt& n) const {
  auto w = unrank(*counts_, n);
  if (!w) {
    throw Error(ErrorKind::OutOfRange, "index " + to_string(n) + " is beyond the finite set");
  }
  return system_.val(*w);
}

bool RecognizableSet::contains(const BigInt& m) const {
  if (m < 0) return false;
  return rep_->accepts(system_.rep(m));
}

std::vector<std::uint8_t> RecognizableSet::characteristic(std::size_t n_max) const {
  std::vector<std::uint8_t> chi(n_max + 1, 0);
  for (std::size_t m = 0; m <= n_max; ++m) chi[m] = contains(BigInt(static_cast<unsigned long>(m))) ? 1 : 0;
  return chi;
}

}  // namespace ans
