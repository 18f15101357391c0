#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>

namespace ans {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& x) { return x.get_str(10); }

/// Parses a nonnegative decimal integer; throws ans::Error on malformed input.
BigInt parse_nonnegative(std::string_view text);

/// Natural logarithm of a positive big integer, accurate to double precision
/// regardless of magnitude.
inline double log_big(const BigInt& x) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

inline double to_double(const Rational& q) { return q.get_d(); }

/// Binomial coefficient C(n, k) as an exact big integer.
inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline BigInt pow_ui(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace ans
