#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "core/automata.hpp"
#include "core/bigint.hpp"

namespace ans {

/// N(q, r): number of words of length r accepted from state q. Rows are
/// computed on demand in increasing r and never change once published, so
/// references returned by `row` stay valid for the table's lifetime.
class CountTable {
 public:
  explicit CountTable(Dfa d);
  CountTable(const CountTable&) = delete;
  CountTable& operator=(const CountTable&) = delete;

  const Dfa& dfa() const noexcept { return dfa_; }

  using Row = std::vector<BigInt>;
  const Row& row(std::size_t r) const;
  const BigInt& N(State q, std::size_t r) const { return row(r)[static_cast<std::size_t>(q)]; }

  /// u(n) = N(q0, n); zero for the empty automaton.
  const BigInt& u(std::size_t n) const;
  /// v(n) = u(0) + ... + u(n), with v(-1) = 0.
  const BigInt& v(long n) const;

 private:
  void grow_to(std::size_t r) const;

  Dfa dfa_;
  mutable std::mutex mutex_;
  mutable std::vector<std::unique_ptr<Row>> rows_;
  mutable std::vector<std::unique_ptr<BigInt>> v_;
  BigInt zero_;
};

/// u(0..n) without keeping more than two rows alive.
std::vector<BigInt> count_prefix(const Dfa& d, std::size_t n);

/// Number of accepted words of length n, found by generating words
/// letter by letter. Exponential; meant as an independent check.
BigInt brute_force_count(const Dfa& d, std::size_t n);

/// Lines `n,u,v` for n = 0..n_max, preceded by the header.
std::string counts_csv(const CountTable& table, std::size_t n_max);

}  // namespace ans
