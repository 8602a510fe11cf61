#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pvc/constants.hpp"
#include "pvc/instance.hpp"
#include "pvc/pvclp.hpp"
#include "pvc/rng.hpp"

namespace pvc {

/// An integral solution. cost and covered are recomputed from the instance.
struct VertexSelection {
  VertexSet chosen;
  Cost cost = 0;
  std::vector<Weight> covered;
  bool feasible = false;
};

VertexSelection make_selection(const Instance& inst, VertexSet chosen);

struct RoundingConfig {
  std::uint64_t seed = 0;
  int rounds_constant = 4;
  int max_restarts = 8;
  bool prune = false;
};

/// c * ceil(log2(r + 1)), at least 1.
int rounds_for(int num_groups, int rounds_constant);

/// One pass of threshold rounding. Vertex v is taken when x_v >= 1/6 and
/// otherwise with probability 6 x_v. Exactly one uniform draw is consumed per
/// vertex, in id order, whether or not it is used.
VertexSelection round_once(const Instance& inst, const std::vector<double>& x, Rng& rng);

/// Probability-weighted cost of one round: sum_v min(1, 6 x_v) c_v.
double expected_round_cost(const Instance& inst, const std::vector<double>& x);

/// Normalized truncated degree min(wdeg_i(v,A), residual_i(A)) / residual_i(A)
/// summed against x over v outside A = {v : x_v >= 1/6}. Returns nullopt
/// when the residual is zero.
std::optional<double> beta_sum(const Instance& inst, int group, const std::vector<double>& x);

/// Smallest beta_sum over groups with positive residual (+inf if none).
double min_beta_sum(const Instance& inst, const std::vector<double>& x);

struct SolveReport {
  double lp_value = 0.0;
  int rounds = 0;
  int restarts = 0;
  bool first_attempt_feasible = false;
  bool feasible = false;
  Cost cost = 0;
  std::optional<Cost> pruned_cost;
  double ratio = 0.0;  // cost / lp_value (0 when lp_value is 0)
  std::uint64_t seed = 0;
  std::vector<Weight> covered;
  std::vector<Weight> targets;
  VertexSet chosen;
  double lp_seconds = 0.0;
  double rounding_seconds = 0.0;

  /// Flat "key value" lines. Timing lines only when requested, so that
  /// default output is reproducible byte for byte.
  std::string to_text(bool with_timing = false) const;
};

struct RoundedSolution {
  VertexSelection selection;
  std::optional<VertexSelection> pruned;
  SolveReport report;
};

/// Unions rounds_for(r, c) independent rounds. An infeasible union triggers a
/// restart on a fresh substream, up to max_restarts; after that throws
/// InfeasibleAfterRestartsError. Throws std::invalid_argument if x violates
/// the beta-sum precondition.
///
/// Substreams: attempt a, round t draws from Rng(seed).substream(a).substream(t).
RoundedSolution solve_rounded(const Instance& inst, const FractionalSolution& fractional,
                              const RoundingConfig& config);

/// Drops chosen vertices, most expensive first, while the set stays feasible.
VertexSelection prune_selection(const Instance& inst, const VertexSelection& selection);

struct CoverageEstimate {
  int trials = 0;
  std::vector<double> frequency;  // per group, single-round success rate
  std::vector<double> radius;     // 99% normal-approximation radius
};

/// Trial t uses rng.substream(t); groups count as successes when one round's
/// coverage reaches the target.
CoverageEstimate estimate_round_coverage(const Instance& inst, const std::vector<double>& x, int trials,
                                 const Rng& rng);

}  // namespace pvc
