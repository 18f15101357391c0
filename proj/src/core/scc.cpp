#include "core/scc.hpp"

#include <algorithm>
#include <numeric>

namespace ans {

namespace {

std::vector<std::vector<int>> tarjan(const Dfa& d) {
  const int n = static_cast<int>(d.num_states());
  const std::size_t k = d.num_letters();
  std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
  std::vector<int> stack;
  std::vector<std::vector<int>> out;
  int counter = 0;

  struct Frame {
    int state;
    std::size_t letter;
  };
  for (int root = 0; root < n; ++root) {
    if (index[static_cast<std::size_t>(root)] >= 0) continue;
    std::vector<Frame> call{{root, 0}};
    index[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = counter++;
    stack.push_back(root);
    on_stack[static_cast<std::size_t>(root)] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto v = static_cast<std::size_t>(f.state);
      if (f.letter < k) {
        State w = d.next(f.state, f.letter++);
        if (w == kNoState) continue;
        const auto wi = static_cast<std::size_t>(w);
        if (index[wi] < 0) {
          index[wi] = low[wi] = counter++;
          stack.push_back(w);
          on_stack[wi] = true;
          call.push_back({w, 0});
        } else if (on_stack[wi]) {
          low[v] = std::min(low[v], index[wi]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<int> comp;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = false;
          comp.push_back(w);
        } while (w != f.state);
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
      }
      int finished = f.state;
      call.pop_back();
      if (!call.empty()) {
        auto parent = static_cast<std::size_t>(call.back().state);
        low[parent] = std::min(low[parent], low[static_cast<std::size_t>(finished)]);
      }
    }
  }
  // Tarjan emits sinks first.
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

SccDecomposition scc_decompose(const Dfa& d) {
  SccDecomposition r;
  auto parts = tarjan(d);
  r.component_of.assign(d.num_states(), -1);
  for (std::size_t c = 0; c < parts.size(); ++c) {
    for (int s : parts[c]) r.component_of[static_cast<std::size_t>(s)] = static_cast<int>(c);
  }
  r.components.resize(parts.size());
  r.successors.resize(parts.size());
  for (std::size_t c = 0; c < parts.size(); ++c) {
    Component& comp = r.components[c];
    comp.states.assign(parts[c].begin(), parts[c].end());
    const std::size_t m = comp.states.size();
    comp.matrix.assign(m, std::vector<std::uint64_t>(m, 0));
    auto local = [&](State s) {
      return static_cast<std::size_t>(
          std::lower_bound(comp.states.begin(), comp.states.end(), s) - comp.states.begin());
    };
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t a = 0; a < d.num_letters(); ++a) {
        State t = d.next(comp.states[i], a);
        if (t == kNoState) continue;
        int tc = r.component_of[static_cast<std::size_t>(t)];
        if (tc == static_cast<int>(c)) {
          ++comp.matrix[i][local(t)];
        } else {
          r.successors[c].push_back(tc);
        }
      }
    }
    auto& succ = r.successors[c];
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());

    comp.cyclic = m > 1 || comp.matrix[0][0] > 0;
    if (!comp.cyclic) continue;
    comp.simple_cycle = std::all_of(comp.matrix.begin(), comp.matrix.end(), [](const auto& row) {
      return std::accumulate(row.begin(), row.end(), std::uint64_t{0}) == 1;
    });
    // Period: gcd of level differences along internal edges of a BFS tree.
    std::vector<long> level(m, -1);
    std::vector<std::size_t> queue{0};
    level[0] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      std::size_t i = queue[h];
      for (std::size_t j = 0; j < m; ++j) {
        if (comp.matrix[i][j] && level[j] < 0) {
          level[j] = level[i] + 1;
          queue.push_back(j);
        }
      }
    }
    long g = 0;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (comp.matrix[i][j]) g = std::gcd(g, std::labs(level[i] + 1 - level[j]));
      }
    }
    comp.period = static_cast<unsigned>(g);
  }
  return r;
}

}  // namespace ans
