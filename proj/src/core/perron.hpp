#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/bigint.hpp"

namespace ans {

using CountMatrix = std::vector<std::vector<std::uint64_t>>;

/// Closed form of a Perron root when one was recognized and certified.
struct Algebraic {
  enum class Kind { None, Radical, Quadratic };
  Kind kind = Kind::None;
  // Radical: base^(num/den), base >= 2 not a perfect power; the value 1 is
  // base 1, num 0, den 1.
  BigInt base = 1;
  long num = 0, den = 1;
  // Quadratic: (s + sqrt(disc)) / 2 with disc > 0 not a square.
  BigInt s = 0, disc = 0;

  bool is_integer() const { return kind == Kind::Radical && den == 1; }
  /// "2", "sqrt(6)", "6^(1/3)", "(1+sqrt(5))/2"; empty for Kind::None.
  std::string render() const;
  double log_value() const;
};

/// Certified enclosure lo <= θ <= hi of a growth rate, plus its closed form
/// when known.
struct Rate {
  Rational lo = 1, hi = 1;
  Algebraic exact;

  static Rate one();
  bool is_one() const { return exact.kind == Algebraic::Kind::Radical && exact.num == 0; }
  double log_value() const;
  double value() const;
  Rational width() const { return hi - lo; }
  /// "2", "1", "[2.449489742,2.449489743]~sqrt(6)" or "[lo,hi]".
  std::string render() const;
};

inline constexpr double kPerronWidthFloor = 1e-12;

/// Perron root of an irreducible nonnegative integer matrix.
Rate perron_rate(const CountMatrix& a);

/// -1, 0, 1. Rates whose enclosures overlap at the width floor compare equal.
int compare_rates(const Rate& a, const Rate& b);

/// Decimal rendering of q with `digits` fractional digits, rounded down or up.
std::string decimal(const Rational& q, int digits, bool round_up);

/// Determinant by fraction-free elimination.
BigInt determinant(std::vector<std::vector<BigInt>> m);
/// Characteristic polynomial det(xI - A), lowest degree first.
std::vector<BigInt> characteristic_polynomial(const std::vector<std::vector<BigInt>>& a);

/// (b, k) with n = b^k and b not a perfect power; n >= 2.
std::pair<BigInt, unsigned long> primitive_power(const BigInt& n);

}  // namespace ans
