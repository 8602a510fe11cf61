#include "pvc/exact.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "pvc/errors.hpp"

namespace pvc {
namespace {

enum class Forced : char { kFree, kIn, kOut };

class Search {
 public:
  explicit Search(const Instance& inst)
      : inst_(inst),
        n_(inst.num_vertices()),
        order_(n_),
        rank_(n_),
        edge_groups_(inst.num_edges()),
        adjacency_(n_) {
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](VertexId a, VertexId b) { return inst.cost(a) > inst.cost(b); });
    for (int p = 0; p < n_; ++p) rank_[order_[p]] = p;
    for (int i = 0; i < inst.num_groups(); ++i) {
      for (EdgeId e : inst.group(i).edges) edge_groups_[e].push_back(i);
    }
    for (EdgeId e = 0; e < inst.num_edges(); ++e) {
      adjacency_[inst.edge(e).u].push_back(e);
      adjacency_[inst.edge(e).v].push_back(e);
    }
  }

  // Minimum cost with every forced vertex respected; returns limit when no
  // feasible set of cost < limit exists. With first_at_most set, returns as
  // soon as any feasible set of cost <= that bound appears.
  Cost minimize(const std::vector<Forced>& forced, Cost limit, bool stop_at_first) {
    forced_ = &forced;
    best_ = limit;
    stop_at_first_ = stop_at_first;
    found_ = false;
    hits_.assign(inst_.num_edges(), 0);
    covered_.assign(inst_.num_groups(), 0);
    Cost cost = 0;
    for (VertexId v = 0; v < n_; ++v) {
      if (forced[v] == Forced::kIn) {
        add(v);
        cost += inst_.cost(v);
      }
    }
    recurse(0, cost);
    return best_;
  }

  bool found() const { return found_; }
  std::int64_t nodes() const { return nodes_; }

 private:
  void add(VertexId v) {
    for (EdgeId e : adjacency_[v]) {
      if (hits_[e]++ == 0) {
        for (int g : edge_groups_[e]) covered_[g] += inst_.edge(e).weight;
      }
    }
  }

  void remove(VertexId v) {
    for (EdgeId e : adjacency_[v]) {
      if (--hits_[e] == 0) {
        for (int g : edge_groups_[e]) covered_[g] -= inst_.edge(e).weight;
      }
    }
  }

  bool feasible() const {
    for (int i = 0; i < inst_.num_groups(); ++i) {
      if (covered_[i] < inst_.group(i).target) return false;
    }
    return true;
  }

  // Could the free vertices at positions >= pos still meet every target?
  bool reachable(int pos) const {
    for (int i = 0; i < inst_.num_groups(); ++i) {
      Weight potential = covered_[i];
      if (potential >= inst_.group(i).target) continue;
      for (EdgeId e : inst_.group(i).edges) {
        if (hits_[e] > 0) continue;
        const Edge& edge = inst_.edge(e);
        if (open(edge.u, pos) || open(edge.v, pos)) potential += edge.weight;
      }
      if (potential < inst_.group(i).target) return false;
    }
    return true;
  }

  bool open(VertexId v, int pos) const {
    return rank_[v] >= pos && (*forced_)[v] == Forced::kFree;
  }

  void recurse(int pos, Cost cost) {
    ++nodes_;
    if (stop_at_first_ ? (found_ || cost > best_) : cost >= best_) return;
    if (feasible()) {
      found_ = true;
      if (!stop_at_first_) best_ = cost;
      return;
    }
    while (pos < n_ && (*forced_)[order_[pos]] != Forced::kFree) ++pos;
    if (pos == n_ || !reachable(pos)) return;
    const VertexId v = order_[pos];
    add(v);
    recurse(pos + 1, cost + inst_.cost(v));
    remove(v);
    recurse(pos + 1, cost);
  }

  const Instance& inst_;
  int n_;
  std::vector<VertexId> order_;
  std::vector<int> rank_;
  std::vector<std::vector<int>> edge_groups_;
  std::vector<std::vector<EdgeId>> adjacency_;
  const std::vector<Forced>* forced_ = nullptr;
  std::vector<int> hits_;
  std::vector<Weight> covered_;
  Cost best_ = 0;
  bool stop_at_first_ = false;
  bool found_ = false;
  std::int64_t nodes_ = 0;
};

}  // namespace

ExactResult exact_solve(const Instance& inst, int vertex_limit) {
  const int n = inst.num_vertices();
  if (n > vertex_limit) {
    throw TooLargeError("exact search limited to " + std::to_string(vertex_limit) +
                        " vertices, instance has " + std::to_string(n));
  }
  Search search(inst);
  std::vector<Forced> forced(n, Forced::kFree);

  ExactResult result;
  const Cost limit = inst.total_cost() + 1;
  result.optimum = search.minimize(forced, limit, false);
  result.nodes = search.nodes();
  if (result.optimum == limit) throw SolverError("instance has no feasible vertex set");

  // Lexicographically smallest optimal set: walk ids in order, keeping a
  // vertex whenever an optimal completion still exists with it included.
  std::vector<bool> chosen(n, false);
  for (VertexId v = 0; v < n; ++v) {
    if (is_feasible(inst, chosen)) break;
    forced[v] = Forced::kIn;
    for (VertexId w = v + 1; w < n; ++w) forced[w] = Forced::kFree;
    search.minimize(forced, result.optimum, true);
    if (search.found()) {
      chosen[v] = true;
    } else {
      forced[v] = Forced::kOut;
    }
  }
  result.chosen = to_set(chosen);
  return result;
}

}  // namespace pvc
