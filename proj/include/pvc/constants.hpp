#pragma once

namespace pvc {

// Vertices with x_v at or above the threshold are taken outright by the
// rounding and form the suppressed set A used by separation. The rounding
// scales the remaining values by kRoundingScale; the two must be reciprocal.
inline constexpr double kThreshold = 1.0 / 6.0;
inline constexpr double kRoundingScale = 6.0;
static_assert(kRoundingScale * kThreshold == 1.0);
static_assert(kThreshold > 0.0 && kThreshold < 1.0);

// LP feasibility and optimality tolerances.
inline constexpr double kFeasTol = 1e-7;
inline constexpr double kOptTol = 1e-6;

}  // namespace pvc
