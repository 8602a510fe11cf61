#pragma once

#include <cstdint>

#include "pvc/instance.hpp"

namespace pvc {

struct ExactResult {
  Cost optimum = 0;
  VertexSet chosen;  // lexicographically smallest optimal set
  std::int64_t nodes = 0;
};

/// Branch and bound over include/exclude decisions, most expensive vertex
/// first. Prunes on cost and on groups whose target is out of reach.
/// Throws TooLargeError when the instance has more than vertex_limit vertices.
ExactResult exact_solve(const Instance& inst, int vertex_limit = 24);

}  // namespace pvc
