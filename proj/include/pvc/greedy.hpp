#pragma once

#include "pvc/instance.hpp"
#include "pvc/rounding.hpp"

namespace pvc {

/// Cost-effectiveness greedy. Gain of v is
///   sum_i min(uncovered group-i weight at v, residual of group i),
/// and the vertex with the best gain / cost is taken (ties: lower id) until
/// every target is met. Zero-cost vertices with positive gain go first,
/// largest gain first. No approximation guarantee is claimed.
VertexSelection greedy_solve(const Instance& inst);

}  // namespace pvc
