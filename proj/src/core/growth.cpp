#include "core/growth.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <numeric>
#include <sstream>

#include "core/counting.hpp"
#include "core/error.hpp"
#include "core/scc.hpp"

namespace ans {

namespace {

std::string rational_text(const Rational& q) { return q.get_str(10); }

std::string fixed(double x, int digits) {
  std::ostringstream out;
  out.precision(digits);
  out << std::fixed << x;
  return out.str();
}

struct Trimmed {
  Dfa dfa;
  SccDecomposition scc;
};

Trimmed prepare(const Dfa& d) {
  Trimmed t{trim(d), {}};
  if (t.dfa.empty()) throw Error(ErrorKind::EmptyLanguage, "the language is empty");
  t.scc = scc_decompose(t.dfa);
  return t;
}

// Leading-order estimate v(np+i) / (n^c θ^(pn)).
double constant_estimate(const std::vector<BigInt>& v, std::size_t n, std::size_t i, unsigned p,
                         unsigned c, double log_theta) {
  const std::size_t m = n * p + i;
  if (v[m] == 0) return 0.0;
  double logv = log_big(v[m]);
  double nn = static_cast<double>(n);
  return std::exp(logv - c * std::log(nn) - static_cast<double>(p) * nn * log_theta);
}

}  // namespace

LanguageGrowth classify(const Dfa& d) {
  Trimmed t = prepare(d);
  bool any_cycle = false;
  for (const Component& comp : t.scc.components) {
    if (!comp.cyclic) continue;
    any_cycle = true;
    if (!comp.simple_cycle) return LanguageGrowth::Exponential;
  }
  return any_cycle ? LanguageGrowth::Polynomial : LanguageGrowth::Finite;
}

std::string GrowthSignature::render() const {
  return "sig p=" + std::to_string(p) + " c=" + std::to_string(c) + " theta=" + theta.render();
}

std::string GrowthSignature::render_constants() const {
  std::string s = "const";
  for (std::size_t i = 0; i < constants.size(); ++i) {
    std::ostringstream v;
    v.precision(6);
    v << constants[i];
    s += " a" + std::to_string(i) + "~" + v.str();
  }
  s += std::string(" converged=") + (constants_converged ? "yes" : "no") + " certified=no";
  return s;
}

GrowthSignature signature(const Dfa& d) {
  Trimmed t = prepare(d);
  const auto& comps = t.scc.components;
  std::vector<std::optional<Rate>> rates(comps.size());
  std::optional<Rate> theta;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (!comps[i].cyclic) continue;
    rates[i] = comps[i].simple_cycle ? Rate::one() : perron_rate(comps[i].matrix);
    if (!theta || compare_rates(*rates[i], *theta) > 0) theta = rates[i];
  }
  if (!theta) throw Error(ErrorKind::FiniteLanguage, "the language is finite");

  GrowthSignature sig;
  sig.theta = *theta;
  std::vector<int> critical(comps.size(), 0);
  unsigned long period = 1;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (rates[i] && compare_rates(*rates[i], *theta) == 0) {
      critical[i] = 1;
      ++sig.critical_components;
      period = std::lcm(period, static_cast<unsigned long>(comps[i].period));
    }
  }
  // Longest chain of critical components along condensation paths from the start.
  std::vector<int> best(comps.size(), -1);
  const int start = t.scc.component_of[static_cast<std::size_t>(t.dfa.initial())];
  best[static_cast<std::size_t>(start)] = critical[static_cast<std::size_t>(start)];
  int chain = 0;
  for (std::size_t i = static_cast<std::size_t>(start); i < comps.size(); ++i) {
    if (best[i] < 0) continue;
    chain = std::max(chain, best[i]);
    for (int s : t.scc.successors[i]) {
      auto si = static_cast<std::size_t>(s);
      best[si] = std::max(best[si], best[i] + critical[si]);
    }
  }
  sig.p = static_cast<unsigned>(period);
  sig.c = static_cast<unsigned>(sig.theta.is_one() ? chain : chain - 1);

  // Constants at n and n - 1 near length 400.
  const std::size_t target = 400;
  const std::size_t n1 = std::max<std::size_t>(target / sig.p, 3);
  std::vector<BigInt> u = count_prefix(t.dfa, n1 * sig.p + sig.p);
  std::vector<BigInt> v(u.size());
  std::partial_sum(u.begin(), u.end(), v.begin());
  const double log_theta = sig.theta.log_value();
  sig.constants_converged = true;
  for (unsigned i = 0; i < sig.p; ++i) {
    double a1 = constant_estimate(v, n1, i, sig.p, sig.c, log_theta);
    double a0 = constant_estimate(v, n1 - 1, i, sig.p, sig.c, log_theta);
    sig.constants.push_back(a1);
    if (a1 == 0 || std::fabs(a0 / a1 - 1.0) > 0.01) sig.constants_converged = false;
  }
  return sig;
}

Validation validate(const GrowthSignature& sig_l, const GrowthSignature& sig_x) {
  Validation v;
  int cmp = compare_rates(sig_x.theta, sig_l.theta);
  if (cmp > 0) {
    v.ok = false;
    v.violation = "theta_X=" + sig_x.theta.render() + " exceeds theta_L=" + sig_l.theta.render();
  } else if (cmp == 0 && sig_x.c > sig_l.c) {
    v.ok = false;
    v.violation = "equal theta but d=" + std::to_string(sig_x.c) + " > c=" + std::to_string(sig_l.c);
  }
  return v;
}

namespace {

// Polynomial through (n, v[n]) for the last deg+1 indices, as rational
// coefficients lowest degree first (Newton form expanded).
std::vector<Rational> interpolate_tail(const std::vector<BigInt>& v, unsigned deg) {
  const std::size_t n0 = v.size() - deg - 1;
  std::vector<Rational> coeffs(deg + 1, Rational(0));
  std::vector<Rational> diffs;
  for (std::size_t i = 0; i <= deg; ++i) diffs.emplace_back(v[n0 + i]);
  std::vector<Rational> newton;
  for (unsigned level = 0; level <= deg; ++level) {
    newton.push_back(diffs[0]);
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i) {
      diffs[i] = (diffs[i + 1] - diffs[i]) / Rational(static_cast<long>(level) + 1);
    }
    diffs.pop_back();
  }
  // Expand sum newton[k] * prod_{j<k} (x - (n0 + j)).
  std::vector<Rational> basis{Rational(1)};
  for (unsigned k = 0; k <= deg; ++k) {
    for (std::size_t i = 0; i < basis.size(); ++i) coeffs[i] += newton[k] * basis[i];
    std::vector<Rational> next(basis.size() + 1, Rational(0));
    const Rational root(static_cast<long>(n0 + k));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      next[i + 1] += basis[i];
      next[i] -= root * basis[i];
    }
    basis = std::move(next);
  }
  return coeffs;
}

Rational eval(const std::vector<Rational>& p, long x) {
  Rational r = 0;
  for (std::size_t i = p.size(); i-- > 0;) r = r * Rational(x) + p[i];
  return r;
}

std::string innerconst_closed_form(const Rational& inv, unsigned d) {
  if (d == 1) return rational_text(inv);
  BigInt rn, rd;
  bool exact_n = mpz_root(rn.get_mpz_t(), inv.get_num_mpz_t(), d) != 0;
  bool exact_d = mpz_root(rd.get_mpz_t(), inv.get_den_mpz_t(), d) != 0;
  if (exact_n && exact_d) return rational_text(Rational(rn, rd));
  if (inv.get_den() == 1 && inv.get_num() >= 2) {
    Algebraic a;
    a.kind = Algebraic::Kind::Radical;
    auto [b, k] = primitive_power(inv.get_num());
    long g = std::gcd(static_cast<long>(k), static_cast<long>(d));
    a.base = b;
    a.num = static_cast<long>(k) / g;
    a.den = static_cast<long>(d) / g;
    return a.render();
  }
  return "(" + rational_text(inv) + ")^(1/" + std::to_string(d) + ")";
}

}  // namespace

GrowthClass predict(const GrowthSignature& sig_l, const GrowthSignature& sig_x,
                    const std::vector<BigInt>* v_x) {
  Validation check = validate(sig_l, sig_x);
  if (!check.ok) throw Error(ErrorKind::Infeasible, "infeasible signatures: " + check.violation);
  GrowthClass g;
  const long c = sig_l.c, d = sig_x.c;
  const Rate& tl = sig_l.theta;
  const Rate& tx = sig_x.theta;

  if (!tx.is_one()) {
    g.kind = GrowthClass::Kind::LogPower;
    using K = Algebraic::Kind;
    if (compare_rates(tl, tx) == 0) {
      g.f_exact = true;
      g.f = 1;
    } else if (tl.exact.kind == K::Radical && tx.exact.kind == K::Radical &&
               tl.exact.base == tx.exact.base) {
      g.f_exact = true;
      g.f = Rational(tl.exact.num * tx.exact.den, tl.exact.den * tx.exact.num);
      g.f.canonicalize();
    }
    if (g.f_exact) {
      g.f_lo = g.f_hi = to_double(g.f);
      g.f_text = rational_text(g.f);
      Rational e = Rational(c) - Rational(d) * g.f;
      g.logexp_lo = g.logexp_hi = to_double(e);
      g.logexp_text = rational_text(e);
      return g;
    }
    auto log_lo = [](const Rate& r) {
      return r.exact.kind != K::None ? r.log_value() : std::log(to_double(r.lo));
    };
    auto log_hi = [](const Rate& r) {
      return r.exact.kind != K::None ? r.log_value() : std::log(to_double(r.hi));
    };
    g.f_lo = log_lo(tl) / log_hi(tx);
    g.f_hi = log_hi(tl) / log_lo(tx);
    const bool symbolic = tl.exact.kind != K::None && tx.exact.kind != K::None;
    g.f_text = symbolic ? "log(" + tl.exact.render() + ")/log(" + tx.exact.render() + ")"
                        : "[" + fixed(g.f_lo, 9) + "," + fixed(g.f_hi, 9) + "]";
    g.logexp_lo = static_cast<double>(c) - static_cast<double>(d) * g.f_hi;
    g.logexp_hi = static_cast<double>(c) - static_cast<double>(d) * g.f_lo;
    if (d == 0) {
      g.logexp_text = std::to_string(c);
    } else if (symbolic) {
      g.logexp_text = std::to_string(c) + "-" + (d == 1 ? "" : std::to_string(d) + "*") + g.f_text;
    } else {
      g.logexp_text = "[" + fixed(g.logexp_lo, 9) + "," + fixed(g.logexp_hi, 9) + "]";
    }
    return g;
  }

  if (d == 0) throw Error(ErrorKind::FiniteLanguage, "rep_S(X) is finite");
  if (tl.is_one()) {
    g.kind = GrowthClass::Kind::Power;
    g.r = Rational(c, d);
    g.r.canonicalize();
    return g;
  }

  g.kind = GrowthClass::Kind::StretchedExp;
  g.polyexp = Rational(c, d);
  g.polyexp.canonicalize();
  g.innerexp = Rational(1, d);
  g.base = tl;
  const unsigned deg = static_cast<unsigned>(d);
  if (sig_x.p == 1 && v_x && v_x->size() > 3 * deg + 8) {
    std::vector<Rational> poly = interpolate_tail(*v_x, deg);
    bool polynomial_tail = true;
    for (std::size_t n = v_x->size() - 2 * deg - 6; n < v_x->size(); ++n) {
      if (eval(poly, static_cast<long>(n)) != Rational((*v_x)[n])) polynomial_tail = false;
    }
    if (polynomial_tail && poly.back() > 0) {
      g.b = poly.back();
      bool monomial = true;
      for (std::size_t n = 0; n < v_x->size(); ++n) {
        Rational mono = g.b;
        for (unsigned i = 0; i < deg; ++i) mono *= static_cast<long>(n);
        if (mono != Rational((*v_x)[n])) monomial = false;
      }
      g.refined = monomial ? GrowthClass::Refined::Exact : GrowthClass::Refined::Asymptotic;
      const Rational inv = 1 / g.b;
      g.innerconst_lo = g.innerconst_hi = std::pow(to_double(inv), 1.0 / deg);
      g.innerconst_text = innerconst_closed_form(inv, deg);
      return g;
    }
  }
  // Per-residue constants only: v_X(m) ~ (a_j / q^d) m^d along residue j.
  double lo = INFINITY, hi = 0;
  for (double a : sig_x.constants) {
    double per_length = a / std::pow(static_cast<double>(sig_x.p), static_cast<double>(deg));
    double k = std::pow(1.0 / per_length, 1.0 / deg);
    lo = std::min(lo, k);
    hi = std::max(hi, k);
  }
  g.innerconst_lo = lo;
  g.innerconst_hi = hi;
  g.innerconst_text = "[" + fixed(lo, 6) + "," + fixed(hi, 6) + "]";
  return g;
}

std::string GrowthClass::render() const {
  switch (kind) {
    case Kind::LogPower:
      return "class logpower f=" + f_text + " logexp=" + logexp_text;
    case Kind::Power:
      return "class power r=" + rational_text(r);
    case Kind::StretchedExp: {
      std::string s = "class stretchedexp polyexp=" + rational_text(polyexp) +
                      " base=" + base.render() + " innerexp=" + rational_text(innerexp);
      switch (refined) {
        case Refined::Asymptotic: return s + " innerconst~" + innerconst_text + " refined=asymptotic";
        case Refined::Exact: return s + " innerconst=" + innerconst_text + " refined=exact";
        case Refined::None: return s + " innerconst=" + innerconst_text + " refined=none";
      }
    }
  }
  return {};
}

GrowthClass predict_set(const RecognizableSet& x) {
  if (!x.is_infinite()) throw Error(ErrorKind::FiniteLanguage, "the set is finite");
  GrowthSignature sl = signature(x.system().dfa());
  GrowthSignature sx = signature(x.rep_dfa());
  std::vector<BigInt> v;
  for (long n = 0; n <= 96; ++n) v.push_back(x.rep_counts().v(n));
  return predict(sl, sx, &v);
}

long bracket_index(const RecognizableSet& x, const BigInt& n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "index must be nonnegative");
  auto w = unrank(x.rep_counts(), n);
  if (!w) throw Error(ErrorKind::OutOfRange, "n is not below F(k) for any k");
  return static_cast<long>(w->size()) - 1;
}

FeasibilityReport impossibility_check(long k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  FeasibilityReport r;
  r.trace.push_back("target: t_X(n) = Theta(n/(log n)^" + std::to_string(k) + ")");
  r.trace.push_back("needs beta > 1 with f = 1 and log-exponent c - d*f = -" + std::to_string(k));
  r.trace.push_back("f = 1 holds iff theta_L = theta_X");
  r.trace.push_back("validate at equal theta requires d <= c");
  // Exhaust symbolic signatures: three orderings of theta_X against theta_L.
  const long bound = k + 3;
  long total = 0, passing = 0, f_one = 0;
  long min_exp = LONG_MAX;
  bool hit = false;
  for (int order = -1; order <= 1; ++order) {
    for (long c = 0; c <= bound; ++c) {
      for (long d = 0; d <= bound; ++d) {
        ++total;
        bool ok = order < 0 || (order == 0 && d <= c);
        if (!ok) continue;
        ++passing;
        if (order != 0) continue;  // f > 1 when theta_X < theta_L
        ++f_one;
        min_exp = std::min(min_exp, c - d);
        if (c - d == -k) hit = true;
      }
    }
  }
  r.trace.push_back("enumerated " + std::to_string(total) + " symbolic signatures with c,d <= " +
                    std::to_string(bound) + ": " + std::to_string(passing) + " pass validate, " +
                    std::to_string(f_one) + " have f = 1, least log-exponent " +
                    std::to_string(min_exp));
  r.feasible = hit;
  r.trace.push_back(hit ? "feasible" : "infeasible: f=1 ⇒ c≥d ⇒ log-exponent ≥ 0");
  return r;
}

FeasibilityReport feasibility(long f, long g) {
  if (f < 1) throw Error(ErrorKind::InvalidArgument, "f must be at least 1");
  if (f == 1 && g < 0) return impossibility_check(-g);
  FeasibilityReport r;
  r.feasible = true;
  if (g >= 0) {
    r.family = "logpoly";
    r.params = {g, f};
  } else {
    r.family = "inverse_logpoly";
    r.params = {-g, f};
  }
  r.trace.push_back("feasible: Theta((log n)^" + std::to_string(g) + " n^" + std::to_string(f) +
                    ") via " + r.family + "(" + std::to_string(r.params[0]) + "," +
                    std::to_string(r.params[1]) + ")");
  return r;
}

}  // namespace ans
