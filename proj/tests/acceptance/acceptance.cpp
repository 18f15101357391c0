// Acceptance run: one PASS/FAIL line per criterion, details indented below.

#include <gmpxx.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"

#include "core/families.hpp"
#include "core/fit.hpp"
#include "core/growth.hpp"
#include "core/morphic.hpp"
#include "core/regex.hpp"
#include "support/oracle.hpp"
#include "support/properties.hpp"

using namespace ans;
using namespace ans::testing;

namespace {

struct Result {
  bool ok = true;
  std::vector<std::string> lines;

  void note(bool good, const std::string& s) {
    ok = ok && good;
    lines.push_back(std::string(good ? "ok   " : "bad  ") + s);
  }
};

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string join(const std::vector<unsigned long>& xs, std::size_t limit = 40) {
  std::string s;
  for (std::size_t i = 0; i < xs.size() && i < limit; ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

// Values of X by decoding words positionally in base b (no numeration code).
std::vector<unsigned long> positional_oracle(const Dfa& rep, unsigned b, std::size_t max_len) {
  std::vector<unsigned long> out;
  for (const auto& w : genealogic_words(rep, max_len))
    if (w.empty() || w[0] != '0') out.push_back(w.empty() ? 0 : std::stoul(w, nullptr, static_cast<int>(b)));
  std::sort(out.begin(), out.end());
  return out;
}

// Values of X as positions in a brute-force genealogic listing of L.
std::vector<unsigned long> listing_oracle(const Dfa& language, const Dfa& rep, std::size_t max_len) {
  std::vector<unsigned long> out;
  auto words = genealogic_words(language, max_len);
  for (std::size_t i = 0; i < words.size(); ++i)
    if (rep.accepts(words[i])) out.push_back(i);
  return out;
}

// ---------------------------------------------------------------- 1

Result golden_enumerations() {
  struct Case {
    std::string label, fixture;
    std::vector<unsigned long> listed;
  };
  const std::vector<Case> cases = {
      {"Pansiot X", "pansiot", {0, 2, 6, 8, 16, 18, 22, 24, 40, 42, 46}},
      {"val_4({1,3}*)", "base4_13", {1, 3, 5, 7, 13, 15, 21, 23, 29, 31}},
      {"val_4({1,2,3}*)", "base4_123", {0, 1, 3, 5, 6, 7, 9, 10, 11, 13, 14, 15, 21, 22}},
      {"val_4(L_F)", "base4_fibonacci", {0, 1, 4, 16, 17, 64, 70, 256, 257, 260, 272, 273, 1024}},
      {"val_4(K)", "base4_K", {0, 1, 2, 3, 4, 6, 8, 10, 12, 14, 17, 18, 19, 25, 26, 27, 33}},
      {"val_2(1*0*)", "base2_10star", {0, 1, 2, 4, 6, 7, 8, 12, 15, 16, 24, 28, 30, 31}},
  };
  Result r;
  for (const auto& c : cases) {
    auto start = std::chrono::steady_clock::now();
    SystemSpec spec = fixture(c.fixture);
    RecognizableSet x = build_set(spec);
    std::vector<unsigned long> got;
    for (unsigned long n = 0; n < c.listed.size(); ++n) got.push_back(x.t(n).get_ui());
    double secs = seconds_since(start);

    std::vector<unsigned long> oracle;
    if (c.fixture == "pansiot")
      oracle = listing_oracle(spec.language.dfa, spec.set->dfa, 6);
    else
      oracle = positional_oracle(spec.set->dfa, c.fixture == "base2_10star" ? 2 : 4, c.fixture == "base2_10star" ? 10 : 7);
    oracle.resize(std::min(oracle.size(), got.size()));
    bool impl_ok = oracle == got;

    std::string line = c.label + ": computed " + join(got) + " (" + std::to_string(secs).substr(0, 5) + " s)";
    if (!impl_ok) line += "; independent oracle gives " + join(oracle);
    if (got == c.listed) {
      r.note(impl_ok && secs < 1.0, line + "; matches the listed values");
    } else {
      std::size_t i = 0;
      while (i < got.size() && got[i] == c.listed[i]) ++i;
      r.note(false, line + "; listed " + join(c.listed) + " first differs at index " + std::to_string(i) +
                        (impl_ok ? " (oracle agrees with computed)" : ""));
    }
  }
  return r;
}

// ---------------------------------------------------------------- 2

Result counting_closed_forms() {
  Result r;
  constexpr unsigned long N = 40;
  {
    RecognizableSet x = build_set(fixture("pansiot"));
    bool ok = true;
    for (unsigned long n = 0; n <= N; ++n) {
      ok = ok && x.system().counts().v(static_cast<long>(n)) == (n + 1) * pow_ui(2, n);
      ok = ok && x.rep_counts().v(static_cast<long>(n)) == pow_ui(2, n);
    }
    r.note(ok, "Pansiot: v_L(n) = (n+1)2^n and v_rep(n) = 2^n for n <= 40");
  }
  {
    CountTable k(automaton_k());
    bool ok = true;
    for (unsigned long n = 0; 2 * n + 1 <= N; ++n)
      ok = ok && k.u(2 * n) == pow_ui(6, n) && k.u(2 * n + 1) == 3 * pow_ui(6, n);
    r.note(ok, "K: u(2n) = 6^n, u(2n+1) = 3*6^n for 2n+1 <= 40");
  }
  for (int l = 1; l <= 5; ++l) {
    NumerationSystem s = build_system(bounded(l));
    bool ok = true;
    for (unsigned long n = 0; n <= N; ++n)
      ok = ok && s.counts().v(static_cast<long>(n)) == binomial(n + static_cast<unsigned long>(l), static_cast<unsigned long>(l));
    r.note(ok, "B_" + std::to_string(l) + ": v(n) = C(n+" + std::to_string(l) + "," + std::to_string(l) + ") for n <= 40");
  }
  {
    // v_{L_F}(n) = round(phi^(n+2) / sqrt 5)
    NumerationSystem s = build_system(fibonacci());
    mpf_class sqrt5(5, 512), phi(0, 512);
    sqrt5 = sqrt(sqrt5);
    phi = (1 + sqrt5) / 2;
    bool ok = true;
    mpf_class power(phi, 512);
    power *= phi;
    for (unsigned long n = 0; n <= N; ++n) {
      mpf_class q = power / sqrt5 + mpf_class(0.5, 512);
      mpz_class rounded(floor(q));
      ok = ok && s.counts().v(static_cast<long>(n)) == rounded;
      power *= phi;
    }
    r.note(ok, "L_F: v(n) = round(phi^(n+2)/sqrt(5)) for n <= 40");
  }
  return r;
}

// ---------------------------------------------------------------- 3

const std::vector<std::string> kSixFixtures = {"pansiot", "base4_13", "base4_123", "base4_fibonacci", "base4_K",
                                               "base2_10star"};

Result lemma_oracle() {
  Result r;
  for (const auto& name : kSixFixtures) {
    auto start = std::chrono::steady_clock::now();
    LemmaReport rep = verify_lemma_L(build_set(fixture(name)), 40);
    double secs = seconds_since(start);
    r.note(rep.ok && secs < 1.0, name + ": |g(mu^n(alpha))| = v_L(n) and F(n) = v_rep(n), n <= 40, " +
                                     std::to_string(secs).substr(0, 5) + " s" + (rep.ok ? "" : " -- " + rep.detail));
  }
  return r;
}

// ---------------------------------------------------------------- 4

struct ClassCase {
  std::string label;
  std::function<SystemSpec()> make;
  std::string expected;
  double f;  // numeric exponent used to select the fits of criterion 5
  bool stretched = false;
};

std::vector<ClassCase> class_cases() {
  auto fx = [](std::string n) { return [n] { return fixture(n); }; };
  std::vector<ClassCase> v = {
      {"Theta(n log n), Pansiot", fx("pansiot"), "class logpower f=1 logexp=1", 1},
      {"Theta((n/log n)^2), val_4 of the Pansiot language", fx("base4_nlogn2"), "class logpower f=2 logexp=-2", 2},
      {"Theta(n^2), {1,3}*", fx("base4_13"), "class logpower f=2 logexp=0", 2},
      {"Theta(n^(log4/log3)), {1,2,3}*", fx("base4_123"), "class logpower f=log(4)/log(3) logexp=0",
       std::log(4.0) / std::log(3.0)},
      {"Theta(n^(log4/log phi)), L_F", fx("base4_fibonacci"), "class logpower f=log(4)/log((1+sqrt(5))/2) logexp=0",
       std::log(4.0) / std::log((1 + std::sqrt(5.0)) / 2)},
      {"Theta(n^(log4/log sqrt6)), K", fx("base4_K"), "class logpower f=log(4)/log(sqrt(6)) logexp=0",
       std::log(4.0) / std::log(std::sqrt(6.0))},
      {"2^((1+o(1)) sqrt(2n)), 1*0*", fx("base2_10star"),
       "class stretchedexp polyexp=0 base=2 innerexp=1/2 innerconst~sqrt(2) refined=asymptotic", 0, true},
  };
  for (auto [c, d] : {std::pair{1, 1}, {3, 2}, {2, 1}, {5, 2}}) {
    Rational r(c, d);
    r.canonicalize();
    v.push_back({"Theta(n^" + r.get_str() + "), rational_power(" + std::to_string(c) + "," + std::to_string(d) + ")",
                 [c, d] { return rational_power(c, d); }, "class power r=" + r.get_str(), r.get_d()});
  }
  for (auto [k, l] : {std::pair{1, 1}, {2, 1}, {1, 2}}) {
    v.push_back({"Theta((log n)^" + std::to_string(k) + " n^" + std::to_string(l) + "), logpoly(" + std::to_string(k) +
                     "," + std::to_string(l) + ")",
                 [k, l] { return logpoly(k, l); },
                 "class logpower f=" + std::to_string(l) + " logexp=" + std::to_string(k), double(l)});
  }
  return v;
}

Result class_predictions() {
  Result r;
  for (const auto& c : class_cases()) {
    std::string got = predict_set(build_set(c.make())).render();
    r.note(got == c.expected, c.label + ": " + got + (got == c.expected ? "" : " (expected " + c.expected + ")"));
  }
  return r;
}

// ---------------------------------------------------------------- 5

Result empirical_classes() {
  Result r;
  auto start = std::chrono::steady_clock::now();
  auto grid = geometric_grid(1u << 10, 1u << 16, 25);
  for (const auto& c : class_cases()) {
    RecognizableSet x = build_set(c.make());
    GrowthClass cls = predict_set(x);
    if (c.stretched) {
      const unsigned long n = 100000;
      double ratio = log_big(x.t(n)) / std::log(2.0) / std::sqrt(2.0 * n);
      std::ostringstream s;
      s << c.label << ": log2 t(n)/sqrt(2n) = " << ratio << " at n = 10^5, band [0.85,1.15]";
      r.note(ratio >= 0.85 && ratio <= 1.15, s.str());
      continue;
    }
    if (c.f > 2 + 1e-9) {
      r.lines.push_back("skip " + c.label + ": f > 2");
      continue;
    }
    FitReport fit = empirical_fit(x, cls, grid, 8.0);
    r.note(fit.pass, c.label + ": " + fit.render());
  }
  double secs = seconds_since(start);
  r.note(secs < 60.0, "total " + std::to_string(secs).substr(0, 5) + " s, budget 60 s");
  return r;
}

// ---------------------------------------------------------------- 6

Result property_suites(std::uint64_t seed) {
  Result r;
  auto add = [&](const std::string& label, const Outcome& o) { r.note(o.ok, label + ": " + o.detail); };
  for (const auto& name : fixture_files()) add("val(rep(n)) = n", check_val_rep(fixture(name), 10000));
  for (const auto& name : fixture_files()) add("rep vs brute-force sort", check_rep_order(fixture(name), 1000));
  add("product/union/shuffle vs brute force", check_constructions(seed, 10, 8, 12));
  add("recurrence predicts |Q| terms", check_recurrence_prediction(seed + 1, 100));
  add("classify vs empirical growth", check_classify(seed + 2, 200));
  for (long k : {1, 2, 3}) add("impossibility trace", check_impossibility(k));
  return r;
}

// ---------------------------------------------------------------- 7

Result thue_morse() {
  Result r;
  constexpr unsigned long N = 100000;
  RecognizableSet x = build_set(fixture("thue_morse"));
  std::vector<std::uint8_t> chi = x.characteristic(2 * N + 2);

  bool oracle_ok = true;
  for (unsigned long m = 0; m < chi.size(); ++m) oracle_ok = oracle_ok && chi[m] == (__builtin_popcountl(m) & 1);
  r.note(oracle_ok, "characteristic sequence equals popcount parity below " + std::to_string(chi.size()));

  std::vector<unsigned long> violations;
  unsigned long n = 0;
  for (unsigned long m = 0; m < chi.size() && n <= N; ++m) {
    if (!chi[m]) continue;
    if (m > 2 * n) violations.push_back(n);
    ++n;
  }
  bool enumerated = n > N;
  std::string detail = "t_T(n) <= 2n for n <= 10^5: ";
  if (violations.empty())
    detail += "holds";
  else
    detail += std::to_string(violations.size()) + " violation(s) at n = " + join(violations, 10) +
              " (t_T(0) = " + to_string(x.t(0)) + ")";
  r.note(enumerated && violations.empty(), detail);
  if (!violations.empty()) {
    // each pair {2k, 2k+1} holds exactly one member, so t_T(n) is 2n or 2n+1
    bool pairs = true;
    unsigned long k = 0;
    for (unsigned long m = 0; m < chi.size() && k <= N; ++m)
      if (chi[m]) pairs = pairs && (m == 2 * k || m == 2 * k + 1), ++k;
    r.lines.push_back(std::string("info t_T(n) in {2n, 2n+1} for every n <= 10^5: ") + (pairs ? "yes" : "no"));
  }

  // Some period p <= 64 with preperiod <= 256 would make every mismatch
  // chi(i) != chi(i+p) sit below 256.
  std::vector<unsigned> fitting;
  for (unsigned p = 1; p <= 64; ++p) {
    long last = -1;
    for (std::size_t i = 0; i + p < chi.size(); ++i)
      if (chi[i] != chi[i + p]) last = static_cast<long>(i);
    if (last < 256) fitting.push_back(p);
  }
  r.note(fitting.empty(), "no period <= 64 with preperiod <= 256 fits chi_T on [0," + std::to_string(chi.size()) + ")");
  return r;
}

// ---------------------------------------------------------------- 8

Result catalan() {
  Result r;
  std::vector<unsigned long> first;
  for (unsigned long m = 0; m < 8; ++m) first.push_back(BigInt(binomial(2 * m, m) / (m + 1)).get_ui());
  r.note(first == std::vector<unsigned long>{1, 1, 2, 5, 14, 42, 132, 429}, "prefix " + join(first));

  // t(n) = C_(n+1) for the set C = {1, 2, 5, 14, ...}
  auto grid = geometric_grid(1u << 10, 1u << 16, 25);
  std::vector<double> log_t;
  for (unsigned long n : grid) {
    double m = static_cast<double>(n + 1);
    log_t.push_back(std::lgamma(2 * m + 1) - 2 * std::lgamma(m + 1) - std::log(m + 1));
  }
  for (const auto& f : minimax_family_fits(grid, log_t)) {
    std::ostringstream s;
    // spreads reach e^1000s here, so report logs
    s << f.family << " best log-spread " << f.log_spread << " at (";
    for (std::size_t i = 0; i < f.params.size(); ++i) s << (i ? "," : "") << f.params[i];
    s << "), tolerance log 8 = " << std::log(8.0);
    r.note(f.log_spread > std::log(8.0), s.str() + " -> no fit");
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int only = 0;
  std::uint64_t seed = 20260101;
  app.add_option("--criterion", only, "run a single criterion (1-8)")->check(CLI::Range(0, 8));
  app.add_option("--seed", seed, "seed of the randomized property suites");
  CLI11_PARSE(app, argc, argv);

  const std::map<int, std::pair<std::string, std::function<Result()>>> criteria = {
      {1, {"golden enumerations", golden_enumerations}},
      {2, {"counting closed forms", counting_closed_forms}},
      {3, {"morphic count oracle on six fixtures", lemma_oracle}},
      {4, {"class predictions", class_predictions}},
      {5, {"empirical Theta fits", empirical_classes}},
      {6, {"property suites", [seed] { return property_suites(seed); }}},
      {7, {"Thue-Morse fixture", thue_morse}},
      {8, {"Catalan negative control", catalan}},
  };

  bool all = true;
  for (const auto& [id, c] : criteria) {
    if (only != 0 && only != id) continue;
    Result res;
    try {
      res = c.second();
    } catch (const std::exception& e) {
      res.note(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << id << " " << (res.ok ? "PASS" : "FAIL") << " " << c.first << "\n";
    for (const auto& l : res.lines) std::cout << "    " << l << "\n";
    all = all && res.ok;
  }
  return all ? 0 : 1;
}
