#include "pvc/instance.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "pvc/errors.hpp"

namespace pvc {

Instance::Instance(std::vector<Cost> costs, std::vector<Edge> edges,
                   std::vector<Group> groups, ValidationOptions options)
    : costs_(std::move(costs)), edges_(std::move(edges)), groups_(std::move(groups)) {
  const int n = num_vertices();
  const int m = num_edges();

  for (int v = 0; v < n; ++v) {
    if (costs_[v] < 0) {
      throw InvariantError("vertex " + std::to_string(v) + ": negative cost");
    }
  }
  for (int e = 0; e < m; ++e) {
    const Edge& edge = edges_[e];
    if (edge.u < 0 || edge.u >= n || edge.v < 0 || edge.v >= n) {
      throw InvariantError("edge " + std::to_string(e) + ": endpoint out of range");
    }
    if (edge.u == edge.v) {
      throw InvariantError("edge " + std::to_string(e) + ": self-loop");
    }
    if (edge.weight <= 0) {
      throw InvariantError("edge " + std::to_string(e) + ": weight must be positive");
    }
  }

  group_weight_.assign(groups_.size(), 0);
  for (int i = 0; i < num_groups(); ++i) {
    Group& g = groups_[i];
    const std::string label = "group " + std::to_string(i);
    if (g.edges.empty()) throw InvariantError(label + ": empty");
    std::sort(g.edges.begin(), g.edges.end());
    if (std::adjacent_find(g.edges.begin(), g.edges.end()) != g.edges.end()) {
      throw InvariantError(label + ": duplicate edge");
    }
    for (EdgeId e : g.edges) {
      if (e < 0 || e >= m) throw InvariantError(label + ": edge id out of range");
      group_weight_[i] += edges_[e].weight;
    }
    if (g.target < 0) throw InvariantError(label + ": negative target");
    if (g.target > group_weight_[i]) {
      throw InvariantError(label + ": target " + std::to_string(g.target) +
                           " exceeds total group weight " +
                           std::to_string(group_weight_[i]));
    }
  }

  if (options.strict_partition && !is_strict_partition()) {
    throw InvariantError("groups are not a partition of the edge set");
  }

  incident_.assign(static_cast<std::size_t>(num_groups()) * n, {});
  for (int i = 0; i < num_groups(); ++i) {
    for (EdgeId e : groups_[i].edges) {
      incident_[static_cast<std::size_t>(i) * n + edges_[e].u].push_back(e);
      incident_[static_cast<std::size_t>(i) * n + edges_[e].v].push_back(e);
    }
  }
}

Cost Instance::total_cost() const {
  return std::accumulate(costs_.begin(), costs_.end(), Cost{0});
}

bool Instance::is_strict_partition() const {
  std::vector<int> owners(edges_.size(), 0);
  for (const Group& g : groups_) {
    for (EdgeId e : g.edges) ++owners[e];
  }
  return std::all_of(owners.begin(), owners.end(), [](int c) { return c == 1; });
}

std::vector<bool> to_mask(int n, const VertexSet& s) {
  std::vector<bool> mask(n, false);
  for (VertexId v : s) {
    if (v < 0 || v >= n) throw std::out_of_range("vertex id out of range");
    mask[v] = true;
  }
  return mask;
}

VertexSet to_set(const std::vector<bool>& mask) {
  VertexSet s;
  for (std::size_t v = 0; v < mask.size(); ++v) {
    if (mask[v]) s.push_back(static_cast<VertexId>(v));
  }
  return s;
}

std::vector<Weight> coverage(const Instance& inst, const std::vector<bool>& chosen) {
  std::vector<Weight> covered(inst.num_groups(), 0);
  for (int i = 0; i < inst.num_groups(); ++i) {
    for (EdgeId e : inst.group(i).edges) {
      const Edge& edge = inst.edge(e);
      if (chosen[edge.u] || chosen[edge.v]) covered[i] += edge.weight;
    }
  }
  return covered;
}

std::vector<Weight> coverage(const Instance& inst, const VertexSet& chosen) {
  return coverage(inst, to_mask(inst.num_vertices(), chosen));
}

bool is_feasible(const Instance& inst, const std::vector<bool>& chosen) {
  const auto covered = coverage(inst, chosen);
  for (int i = 0; i < inst.num_groups(); ++i) {
    if (covered[i] < inst.group(i).target) return false;
  }
  return true;
}

bool is_feasible(const Instance& inst, const VertexSet& chosen) {
  return is_feasible(inst, to_mask(inst.num_vertices(), chosen));
}

Cost set_cost(const Instance& inst, const VertexSet& chosen) {
  Cost total = 0;
  for (VertexId v : chosen) total += inst.cost(v);
  return total;
}

void validate(const SetCoverInstance& sc) {
  if (sc.universe_size < 0) throw InvariantError("negative universe size");
  if (sc.costs.size() != sc.sets.size()) {
    throw InvariantError("set cover: one cost per set required");
  }
  std::vector<bool> hit(sc.universe_size, false);
  for (std::size_t s = 0; s < sc.sets.size(); ++s) {
    if (sc.costs[s] < 0) {
      throw InvariantError("set " + std::to_string(s) + ": negative cost");
    }
    const auto& elems = sc.sets[s];
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (elems[j] < 0 || elems[j] >= sc.universe_size) {
        throw InvariantError("set " + std::to_string(s) + ": element out of range");
      }
      if (j > 0 && elems[j] <= elems[j - 1]) {
        throw InvariantError("set " + std::to_string(s) + ": elements must be sorted and distinct");
      }
      hit[elems[j]] = true;
    }
  }
  for (int u = 0; u < sc.universe_size; ++u) {
    if (!hit[u]) {
      throw InvariantError("element " + std::to_string(u) + " is in no set; instance unsatisfiable");
    }
  }
}

}  // namespace pvc
