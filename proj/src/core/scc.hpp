#pragma once

#include <cstdint>
#include <vector>

#include "core/automata.hpp"

namespace ans {

struct Component {
  std::vector<State> states;
  /// matrix[i][j]: number of letters leading from states[i] to states[j].
  std::vector<std::vector<std::uint64_t>> matrix;
  bool cyclic = false;
  /// Every state has exactly one internal outgoing transition (with multiplicity).
  bool simple_cycle = false;
  /// gcd of cycle lengths; 0 for an acyclic component.
  unsigned period = 0;
};

/// Strongly connected components in topological order of the condensation
/// (every edge goes from a lower to a higher component index).
struct SccDecomposition {
  std::vector<Component> components;
  std::vector<int> component_of;
  std::vector<std::vector<int>> successors;
};

SccDecomposition scc_decompose(const Dfa& d);

}  // namespace ans
