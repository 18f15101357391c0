#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "core/automata.hpp"
#include "core/bigint.hpp"
#include "core/counting.hpp"

namespace ans {

/// The (n+1)-th word of L(counts.dfa()) in genealogic order, or nullopt when
/// the language has at most n words.
std::optional<std::string> unrank(const CountTable& counts, const BigInt& n);

/// Number of words of L(counts.dfa()) genealogically smaller than `word`.
/// The word itself need not be accepted.
BigInt rank(const CountTable& counts, std::string_view word);

/// Genealogic comparison under `alphabet`: negative, zero or positive.
int genealogic_compare(std::string_view a, std::string_view b, const OrderedAlphabet& alphabet);

/// S = (L, Σ, <) on an infinite regular language.
class NumerationSystem {
 public:
  /// Minimizes `language`; throws EmptyLanguage or FiniteLanguage.
  explicit NumerationSystem(const Dfa& language);

  const Dfa& dfa() const noexcept { return *dfa_; }
  const OrderedAlphabet& alphabet() const noexcept { return dfa_->alphabet(); }
  const CountTable& counts() const noexcept { return *counts_; }

  std::string rep(const BigInt& n) const;
  /// Throws RejectedWord when w is not in L.
  BigInt val(std::string_view w) const;

 private:
  std::shared_ptr<const Dfa> dfa_;
  std::shared_ptr<const CountTable> counts_;
};

/// X ⊆ ℕ given by a regular rep_S(X) ⊆ L.
class RecognizableSet {
 public:
  /// Throws NotSubset when L(rep) is not contained in L.
  RecognizableSet(NumerationSystem system, const Dfa& rep);

  /// X = val_S(L(d) ∩ L).
  static RecognizableSet intersecting(NumerationSystem system, const Dfa& d);
  /// X = ℕ.
  static RecognizableSet natural(NumerationSystem system);

  const NumerationSystem& system() const noexcept { return system_; }
  const Dfa& rep_dfa() const noexcept { return *rep_; }
  const CountTable& rep_counts() const noexcept { return *counts_; }
  bool is_infinite() const;

  /// t_X(n); throws OutOfRange beyond a finite set.
  BigInt t(const BigInt& n) const;
  bool contains(const BigInt& m) const;
  /// χ_X(0..n_max).
  std::vector<std::uint8_t> characteristic(std::size_t n_max) const;

 private:
  NumerationSystem system_;
  std::shared_ptr<const Dfa> rep_;
  std::shared_ptr<const CountTable> counts_;
};

}  // namespace ans
