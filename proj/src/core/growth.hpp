#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/automata.hpp"
#include "core/bigint.hpp"
#include "core/numeration.hpp"
#include "core/perron.hpp"

namespace ans {

enum class LanguageGrowth { Finite, Polynomial, Exponential };

/// Gap-theorem classification of L(d): polynomial iff every cyclic strongly
/// connected component of the trim automaton is a simple cycle.
LanguageGrowth classify(const Dfa& d);

/// v(np+i) ~ a_i n^c θ^(pn).
struct GrowthSignature {
  unsigned p = 1;
  unsigned c = 0;
  Rate theta = Rate::one();
  /// Estimates of a_0..a_{p-1}; never certified.
  std::vector<double> constants;
  bool constants_converged = false;
  /// Number of components that attain θ.
  std::size_t critical_components = 0;

  std::string render() const;
  std::string render_constants() const;
};

/// Throws FiniteLanguage / EmptyLanguage.
GrowthSignature signature(const Dfa& d);

struct Validation {
  bool ok = true;
  std::string violation;
};

Validation validate(const GrowthSignature& sig_l, const GrowthSignature& sig_x);

struct GrowthClass {
  enum class Kind { LogPower, Power, StretchedExp };
  enum class Refined { None, Asymptotic, Exact };
  Kind kind = Kind::Power;

  // LogPower: t ~ (log n)^g n^f.
  bool f_exact = false;
  Rational f = 0;
  double f_lo = 0, f_hi = 0;
  std::string f_text, logexp_text;
  double logexp_lo = 0, logexp_hi = 0;

  // Power: t ~ n^r.
  Rational r = 0;

  // StretchedExp: t ~ n^polyexp base^(Θ(n^innerexp)).
  Rational polyexp = 0, innerexp = 0;
  Rate base;
  Refined refined = Refined::None;
  Rational b = 0;  // v_X(n) ~ b n^d when refined
  double innerconst_lo = 0, innerconst_hi = 0;
  std::string innerconst_text;

  std::string render() const;
};

/// Prediction of the Θ-class of t_X. `v_x`, when given, is an
/// exact prefix v_X(0..N) used to refine the stretched-exponential case.
/// Throws Infeasible (with the violated clause) when validate fails.
GrowthClass predict(const GrowthSignature& sig_l, const GrowthSignature& sig_x,
                    const std::vector<BigInt>* v_x = nullptr);

/// Convenience: signatures of L and rep_S(X) plus refinement data.
GrowthClass predict_set(const RecognizableSet& x);

/// k with F(k) <= n < F(k+1) for F = v_{rep_S(X)}; -1 when n < F(0).
/// Throws OutOfRange when n is at least |X| for a finite X.
long bracket_index(const RecognizableSet& x, const BigInt& n);

struct FeasibilityReport {
  bool feasible = false;
  std::string family;  // constructor realizing the target when feasible
  std::vector<long> params;
  std::vector<std::string> trace;
};

/// Is Θ((log n)^g n^f) reachable, f >= 1 an integer? The f = 1, g < 0 case
/// is refuted by exhausting symbolic signatures.
FeasibilityReport feasibility(long f, long g);

/// The f = 1, log-exponent -k case.
FeasibilityReport impossibility_check(long k);

}  // namespace ans
