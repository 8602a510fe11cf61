#include "pvc/greedy.hpp"

#include <algorithm>
#include <vector>

#include "pvc/errors.hpp"

namespace pvc {

VertexSelection greedy_solve(const Instance& inst) {
  const int n = inst.num_vertices();
  const int r = inst.num_groups();
  std::vector<bool> chosen(n, false);
  std::vector<bool> edge_covered(inst.num_edges(), false);
  std::vector<Weight> need(r);
  for (int i = 0; i < r; ++i) need[i] = inst.group(i).target;

  auto done = [&] { return std::all_of(need.begin(), need.end(), [](Weight w) { return w <= 0; }); };
  auto gain = [&](VertexId v) {
    Weight total = 0;
    for (int i = 0; i < r; ++i) {
      if (need[i] <= 0) continue;
      Weight fresh = 0;
      for (EdgeId e : inst.incident(i, v)) {
        if (!edge_covered[e]) fresh += inst.edge(e).weight;
      }
      total += std::min(fresh, need[i]);
    }
    return total;
  };
  auto take = [&](VertexId v) {
    chosen[v] = true;
    for (int i = 0; i < r; ++i) {
      for (EdgeId e : inst.incident(i, v)) {
        if (edge_covered[e]) continue;
        const Edge& edge = inst.edge(e);
        // Mark once, then credit every group holding e.
        edge_covered[e] = true;
        for (int g = 0; g < r; ++g) {
          const auto& members = inst.group(g).edges;
          if (std::binary_search(members.begin(), members.end(), e)) need[g] -= edge.weight;
        }
      }
    }
  };

  // Zero-cost pre-pass.
  while (!done()) {
    VertexId pick = -1;
    Weight best = 0;
    for (VertexId v = 0; v < n; ++v) {
      if (chosen[v] || inst.cost(v) != 0) continue;
      const Weight g = gain(v);
      if (g > best) {
        best = g;
        pick = v;
      }
    }
    if (pick < 0) break;
    take(pick);
  }

  while (!done()) {
    VertexId pick = -1;
    Weight best_gain = 0;
    Cost best_cost = 1;
    for (VertexId v = 0; v < n; ++v) {
      if (chosen[v] || inst.cost(v) == 0) continue;
      const Weight g = gain(v);
      if (g == 0) continue;
      // g / c > best_gain / best_cost
      const auto lhs = static_cast<__int128>(g) * best_cost;
      const auto rhs = static_cast<__int128>(best_gain) * inst.cost(v);
      if (pick < 0 || lhs > rhs) {
        pick = v;
        best_gain = g;
        best_cost = inst.cost(v);
      }
    }
    if (pick < 0) throw SolverError("greedy stalled; instance targets unreachable");
    take(pick);
  }
  return make_selection(inst, to_set(chosen));
}

}  // namespace pvc
