#pragma once

#include <cstdint>
#include <string>

#include "core/system_file.hpp"

namespace ans::testing {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Each check stops at the first counterexample and describes it.

/// val(rep(n)) = n, rep(n) ∈ L and rep strictly increasing, for n < n_max.
Outcome check_val_rep(const SystemSpec& spec, std::uint64_t n_max);

/// rep(n) equals the n-th word of a brute-force genealogic sort of L.
Outcome check_rep_order(const SystemSpec& spec, std::size_t n_max);

/// Product, disjoint union and disjoint shuffle on random pairs: membership
/// of every word up to `word_len`, and u(n) for n <= count_len against
/// brute-force generation and the binomial shuffle identity.
Outcome check_constructions(std::uint64_t seed, int pairs, std::size_t word_len, std::size_t count_len);

/// A recurrence fitted to u(0..3|Q|-1) predicts the next |Q| terms.
Outcome check_recurrence_prediction(std::uint64_t seed, int automata);

/// classify agrees with the growth of v on random trim automata.
Outcome check_classify(std::uint64_t seed, int automata);

/// The impossibility trace for k ends in the c >= d contradiction.
Outcome check_impossibility(long k);

}  // namespace ans::testing
