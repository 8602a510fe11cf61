#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace pvc {

using VertexId = int;
using EdgeId = int;
using Cost = std::int64_t;
using Weight = std::int64_t;

/// Sorted list of distinct vertex ids.
using VertexSet = std::vector<VertexId>;

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  Weight weight = 1;

  bool operator==(const Edge&) const = default;
};

/// An edge group P_i with its coverage target (k_i, or Pi_i when weighted).
struct Group {
  std::vector<EdgeId> edges;  // sorted, distinct
  Weight target = 0;

  bool operator==(const Group&) const = default;
};

struct ValidationOptions {
  /// Require groups to be pairwise disjoint and to cover every edge.
  bool strict_partition = false;
};

/// Partition vertex cover instance. Immutable after construction; the
/// constructor checks every data-model invariant and throws InvariantError.
class Instance {
 public:
  Instance() = default;
  Instance(std::vector<Cost> costs, std::vector<Edge> edges,
           std::vector<Group> groups, ValidationOptions options = {});

  int num_vertices() const { return static_cast<int>(costs_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_groups() const { return static_cast<int>(groups_.size()); }

  const std::vector<Cost>& costs() const { return costs_; }
  Cost cost(VertexId v) const { return costs_[v]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Group>& groups() const { return groups_; }
  const Group& group(int i) const { return groups_[i]; }

  Weight group_weight(int i) const { return group_weight_[i]; }
  Cost total_cost() const;

  /// Edges of group i incident to v (ids into edges()).
  const std::vector<EdgeId>& incident(int i, VertexId v) const {
    return incident_[static_cast<std::size_t>(i) * costs_.size() + v];
  }

  /// True when groups are pairwise disjoint and cover all edges.
  bool is_strict_partition() const;

  bool operator==(const Instance& other) const {
    return costs_ == other.costs_ && edges_ == other.edges_ && groups_ == other.groups_;
  }

 private:
  std::vector<Cost> costs_;
  std::vector<Edge> edges_;
  std::vector<Group> groups_;
  std::vector<Weight> group_weight_;
  std::vector<std::vector<EdgeId>> incident_;
};

/// Per-group covered weight: entry i sums w_e over e in P_i with an
/// endpoint in `chosen`.
std::vector<Weight> coverage(const Instance& inst, const VertexSet& chosen);
std::vector<Weight> coverage(const Instance& inst, const std::vector<bool>& chosen);

bool is_feasible(const Instance& inst, const VertexSet& chosen);
bool is_feasible(const Instance& inst, const std::vector<bool>& chosen);

Cost set_cost(const Instance& inst, const VertexSet& chosen);

std::vector<bool> to_mask(int n, const VertexSet& s);
VertexSet to_set(const std::vector<bool>& mask);

// ---------------------------------------------------------------------------
// Text format
//
//   p pvc <n> <m> <r>          header, first non-comment line
//   v <id> <cost>              n lines
//   e <eid> <u> <v> <weight>   m lines
//   g <gid> <eid> ...          membership, may repeat per group
//   k <gid> <target>           r lines
//
// '#' starts a comment running to end of line.

Instance parse_instance(std::string_view text, ValidationOptions options = {});
Instance read_instance_file(const std::string& path, ValidationOptions options = {});

/// Canonical form: records in id order, single spaces, trailing newline.
std::string serialize_instance(const Instance& inst);

// ---------------------------------------------------------------------------
// Set cover

struct SetCoverInstance {
  int universe_size = 0;
  std::vector<std::vector<int>> sets;  // each sorted, distinct
  std::vector<Cost> costs;

  bool operator==(const SetCoverInstance&) const = default;
};

/// Throws InvariantError when an element is uncovered or a set is malformed.
void validate(const SetCoverInstance& sc);

//   p sc <r> <m>
//   s <sid> <cost> <elem> ...
SetCoverInstance parse_set_cover(std::string_view text);
std::string serialize_set_cover(const SetCoverInstance& sc);

}  // namespace pvc
