#pragma once

#include <cstdint>
#include <optional>

#include "pvc/instance.hpp"

namespace pvc {

/// Star with D unit-cost leaves around vertex 0, unit edge weights, one group
/// holding every edge with target 1.
Instance generate_star(int degree);

enum class GroupAssignment { kRoundRobin, kRandom };

struct RandomInstanceConfig {
  int num_vertices = 8;
  int num_edges = 12;
  int num_groups = 2;
  Cost cost_min = 1;
  Cost cost_max = 10;
  Weight weight_min = 1;
  Weight weight_max = 1;
  GroupAssignment assignment = GroupAssignment::kRandom;
  // Probability that an edge additionally joins each other group.
  double overlap_probability = 0.0;
};

/// Simple graph (no parallel edges) with the requested sizes. Every group is
/// nonempty and its target is uniform in [1, group weight]. Throws
/// std::invalid_argument when the configuration cannot produce an instance.
Instance generate_random(const RandomInstanceConfig& config, std::uint64_t seed);

/// Random set cover instance with every element covered by some set.
SetCoverInstance generate_set_cover(int universe_size, int num_sets, Cost cost_max,
                                    std::uint64_t seed);

/// Bipartite reduction: set vertices 0..m-1 keep their costs, element vertices
/// m..m+r-1 carry `heavy_cost`, and element u's incident edges form group u
/// with target 1. The default heavy cost is 1 + sum of set costs, which
/// exceeds the cost of taking every set vertex.
Instance reduce_set_cover(const SetCoverInstance& sc,
                          std::optional<Cost> heavy_cost = std::nullopt);

Cost default_heavy_cost(const SetCoverInstance& sc);

}  // namespace pvc
