#pragma once

#include <vector>

#include "core/bigint.hpp"

namespace ans {

/// lead·s(n+k) = a_1 s(n+k-1) + ... + a_k s(n) for every n >= valid_from.
/// lead is 1 whenever the minimal recurrence has integer coefficients, which
/// is always the case for integer sequences.
struct LinRec {
  std::size_t order = 0;
  std::vector<BigInt> coeffs;
  BigInt lead = 1;
  std::size_t valid_from = 0;
  std::vector<BigInt> initial;

  /// Coefficients of lead·x^k - a_1 x^(k-1) - ... - a_k, lowest degree first.
  std::vector<BigInt> characteristic() const;
  /// Extends `seq` (which must hold at least valid_from + order terms) by
  /// `extra` terms. Throws if a division is inexact.
  std::vector<BigInt> extend(std::vector<BigInt> seq, std::size_t extra) const;
};

/// Minimal-order recurrence of the tail seq[transient..], found by
/// Berlekamp-Massey over the rationals, then pushed back to the smallest
/// start index at which it still holds on the whole prefix.
/// Throws NoRecurrence when the order exceeds max_order or the tail is too
/// short to certify it (fewer than 2·order terms).
LinRec find_recurrence(const std::vector<BigInt>& seq, std::size_t max_order,
                       std::size_t transient);

using Polynomial = std::vector<BigInt>;  // lowest degree first

Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
/// Exact division; nullopt-like failure is reported by returning false.
bool poly_divides(const Polynomial& divisor, const Polynomial& dividend);
void poly_normalize(Polynomial& p);

/// True iff sum_i p[i]·seq[n+i] = 0 for every n >= from that fits.
bool satisfies(const std::vector<BigInt>& seq, const Polynomial& p, std::size_t from);

}  // namespace ans
