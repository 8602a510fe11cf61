#include "pvc/generators.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pvc/rng.hpp"

namespace pvc {

Instance generate_star(int degree) {
  if (degree < 1) throw std::invalid_argument("star degree must be at least 1");
  std::vector<Cost> costs(degree + 1, 1);
  std::vector<Edge> edges;
  Group all;
  for (int leaf = 1; leaf <= degree; ++leaf) {
    all.edges.push_back(static_cast<EdgeId>(edges.size()));
    edges.push_back({0, leaf, 1});
  }
  all.target = 1;
  return Instance(std::move(costs), std::move(edges), {std::move(all)});
}

Instance generate_random(const RandomInstanceConfig& cfg, std::uint64_t seed) {
  const int n = cfg.num_vertices;
  const int m = cfg.num_edges;
  const int r = cfg.num_groups;
  if (r < 1) throw std::invalid_argument("need at least one group");
  if (m < r) throw std::invalid_argument("need at least as many edges as groups");
  if (n < 2) throw std::invalid_argument("need at least two vertices");
  const std::int64_t max_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (m > max_edges) throw std::invalid_argument("too many edges for a simple graph");
  if (cfg.cost_min < 0 || cfg.cost_min > cfg.cost_max) {
    throw std::invalid_argument("cost range must be nonempty and non-negative");
  }
  if (cfg.weight_min < 1 || cfg.weight_min > cfg.weight_max) {
    throw std::invalid_argument("weight range must be nonempty and positive");
  }
  if (!(cfg.overlap_probability >= 0.0 && cfg.overlap_probability <= 1.0)) {
    throw std::invalid_argument("overlap probability must lie in [0, 1]");
  }

  Rng rng(seed);

  std::vector<Cost> costs(n);
  for (auto& c : costs) c = rng.uniform_int(cfg.cost_min, cfg.cost_max);

  // Partial Fisher-Yates over all unordered pairs.
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(max_edges));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  std::vector<Edge> edges(m);
  for (int e = 0; e < m; ++e) {
    const auto j = static_cast<std::size_t>(rng.uniform_int(e, max_edges - 1));
    std::swap(pairs[e], pairs[j]);
    edges[e] = {pairs[e].first, pairs[e].second,
                rng.uniform_int(cfg.weight_min, cfg.weight_max)};
  }

  std::vector<Group> groups(r);
  std::vector<std::vector<bool>> member(r, std::vector<bool>(m, false));
  if (cfg.assignment == GroupAssignment::kRoundRobin) {
    for (int e = 0; e < m; ++e) member[e % r][e] = true;
  } else {
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    for (int i = m - 1; i > 0; --i) {
      std::swap(order[i], order[rng.uniform_int(0, i)]);
    }
    for (int t = 0; t < m; ++t) {
      const int g = t < r ? t : static_cast<int>(rng.uniform_int(0, r - 1));
      member[g][order[t]] = true;
    }
  }
  if (cfg.overlap_probability > 0.0 && r > 1) {
    for (int e = 0; e < m; ++e) {
      for (int g = 0; g < r; ++g) {
        if (!member[g][e] && rng.bernoulli(cfg.overlap_probability)) member[g][e] = true;
      }
    }
  }

  for (int g = 0; g < r; ++g) {
    Weight total = 0;
    for (int e = 0; e < m; ++e) {
      if (member[g][e]) {
        groups[g].edges.push_back(e);
        total += edges[e].weight;
      }
    }
    groups[g].target = rng.uniform_int(1, total);
  }
  return Instance(std::move(costs), std::move(edges), std::move(groups));
}

SetCoverInstance generate_set_cover(int universe_size, int num_sets, Cost cost_max,
                                    std::uint64_t seed) {
  if (universe_size < 1 || num_sets < 1) {
    throw std::invalid_argument("set cover needs at least one element and one set");
  }
  if (cost_max < 1) throw std::invalid_argument("cost_max must be positive");
  Rng rng(seed);
  SetCoverInstance sc;
  sc.universe_size = universe_size;
  std::vector<std::vector<bool>> has(num_sets, std::vector<bool>(universe_size, false));
  for (int s = 0; s < num_sets; ++s) {
    for (int u = 0; u < universe_size; ++u) has[s][u] = rng.bernoulli(0.4);
  }
  // Every element must be coverable.
  for (int u = 0; u < universe_size; ++u) {
    bool any = false;
    for (int s = 0; s < num_sets; ++s) any = any || has[s][u];
    if (!any) has[rng.uniform_int(0, num_sets - 1)][u] = true;
  }
  for (int s = 0; s < num_sets; ++s) {
    std::vector<int> elems;
    for (int u = 0; u < universe_size; ++u) {
      if (has[s][u]) elems.push_back(u);
    }
    sc.sets.push_back(std::move(elems));
    sc.costs.push_back(rng.uniform_int(1, cost_max));
  }
  return sc;
}

Cost default_heavy_cost(const SetCoverInstance& sc) {
  return 1 + std::accumulate(sc.costs.begin(), sc.costs.end(), Cost{0});
}

Instance reduce_set_cover(const SetCoverInstance& sc, std::optional<Cost> heavy_cost) {
  validate(sc);
  const int m = static_cast<int>(sc.sets.size());
  const int r = sc.universe_size;
  const Cost heavy = heavy_cost.value_or(default_heavy_cost(sc));

  std::vector<Cost> costs(sc.costs);
  costs.resize(m + r, heavy);
  std::vector<Edge> edges;
  std::vector<Group> groups(r);
  for (int s = 0; s < m; ++s) {
    for (int u : sc.sets[s]) {
      groups[u].edges.push_back(static_cast<EdgeId>(edges.size()));
      edges.push_back({s, m + u, 1});
    }
  }
  for (auto& g : groups) g.target = 1;
  return Instance(std::move(costs), std::move(edges), std::move(groups),
                  ValidationOptions{.strict_partition = true});
}

}  // namespace pvc
