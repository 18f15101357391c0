#include <random>
#include <set>

#include "doctest.h"

#include "core/regex.hpp"
#include "core/scc.hpp"
#include "support/oracle.hpp"

using namespace ans;
using namespace ans::testing;

TEST_CASE("a*b*: two simple cycles of period 1") {
  SccDecomposition s = scc_decompose(parse_regex("a*b*", OrderedAlphabet("ab")));
  REQUIRE(s.components.size() == 2);
  for (const auto& c : s.components) {
    CHECK(c.cyclic);
    CHECK(c.simple_cycle);
    CHECK(c.period == 1);
    CHECK(c.states.size() == 1);
  }
  CHECK(s.successors[0] == std::vector<int>{1});
}

TEST_CASE("automaton K: one component of period 2") {
  SccDecomposition s = scc_decompose(automaton_k());
  REQUIRE(s.components.size() == 1);
  const Component& c = s.components[0];
  CHECK(c.cyclic);
  CHECK_FALSE(c.simple_cycle);
  CHECK(c.period == 2);
  CHECK(c.matrix == std::vector<std::vector<std::uint64_t>>{{0, 3}, {2, 0}});
}

TEST_CASE("finite language: no cycles") {
  SccDecomposition s = scc_decompose(parse_regex("ab|ba|a", OrderedAlphabet("ab")));
  for (const auto& c : s.components) {
    CHECK_FALSE(c.cyclic);
    CHECK(c.period == 0);
  }
}

TEST_CASE("period of mixed cycle lengths") {
  // cycles of length 2 and 3 through state 0
  Dfa d = make_dfa("ab", 4, 0, {0}, {{0, 'a', 1}, {1, 'a', 0}, {0, 'b', 2}, {2, 'a', 3}, {3, 'a', 0}});
  SccDecomposition s = scc_decompose(d);
  REQUIRE(s.components.size() == 1);
  CHECK(s.components[0].period == 1);
  Dfa e = make_dfa("ab", 4, 0, {0}, {{0, 'a', 1}, {1, 'a', 0}, {0, 'b', 2}, {2, 'a', 3}, {3, 'a', 1}});
  CHECK(scc_decompose(e).components[0].period == 2);
}

TEST_CASE("random automata: partition and topological order") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    Dfa d = trim(random_dfa(rng, 8, 3));
    if (d.empty()) continue;
    SccDecomposition s = scc_decompose(d);
    std::set<State> seen;
    for (std::size_t k = 0; k < s.components.size(); ++k)
      for (State q : s.components[k].states) {
        CHECK(seen.insert(q).second);
        CHECK(s.component_of[static_cast<std::size_t>(q)] == static_cast<int>(k));
      }
    CHECK(seen.size() == d.num_states());
    for (std::size_t q = 0; q < d.num_states(); ++q)
      for (std::size_t a = 0; a < d.num_letters(); ++a) {
        State r = d.next(static_cast<State>(q), a);
        if (r != kNoState) CHECK(s.component_of[q] <= s.component_of[static_cast<std::size_t>(r)]);
      }
    for (const auto& c : s.components) {
      bool simple = c.cyclic;
      for (const auto& row : c.matrix) {
        std::uint64_t out = 0;
        for (auto x : row) out += x;
        simple = simple && out == 1;
      }
      CHECK(simple == c.simple_cycle);
    }
  }
}
