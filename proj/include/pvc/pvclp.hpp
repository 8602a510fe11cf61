#pragma once

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "pvc/instance.hpp"

namespace pvc {

/// One knapsack-cover row for group i and suppressed set A:
///   sum_{v not in A} min(residual_i(A), wdeg_i(v, A)) x_v >= residual_i(A).
/// Only positive coefficients are stored, in increasing vertex order.
struct KnapsackCoverConstraint {
  int group = 0;
  VertexSet suppressed;
  std::vector<std::pair<VertexId, Weight>> coefficients;
  Weight rhs = 0;

  double lhs(const std::vector<double>& x) const;
  bool operator==(const KnapsackCoverConstraint&) const = default;
};

/// Coverage group i still needs once every vertex of A is picked.
Weight residual(const Instance& inst, int group, const std::vector<bool>& in_a);
Weight residual(const Instance& inst, int group, const VertexSet& a);

/// Weight of group-i edges at v whose other endpoint is outside A.
/// Throws std::invalid_argument if v is in A.
Weight wdeg(const Instance& inst, int group, VertexId v, const std::vector<bool>& in_a);
Weight wdeg(const Instance& inst, int group, VertexId v, const VertexSet& a);

/// std::nullopt when the residual is zero (the row would be vacuous).
std::optional<KnapsackCoverConstraint> build_kc_constraint(const Instance& inst, int group,
                                                           const std::vector<bool>& in_a);
std::optional<KnapsackCoverConstraint> build_kc_constraint(const Instance& inst, int group,
                                                           const VertexSet& a);

/// {v : x_v >= kThreshold - tolerance}.
std::vector<bool> threshold_set(const std::vector<double>& x, double tolerance);

enum class SeparationStatus { kClean, kCostCapViolated, kViolated };

struct SeparationResult {
  SeparationStatus status = SeparationStatus::kClean;
  /// First violated row (lowest group index) when status is kViolated.
  std::optional<KnapsackCoverConstraint> cut;
  double cut_lhs = 0.0;
  /// Every group's violated threshold row, lowest group first.
  std::vector<std::pair<KnapsackCoverConstraint, double>> violated;
  /// Diagnostics: whether each group's A = {} row holds at x.
  std::vector<bool> empty_set_row_holds;
  double cost = 0.0;
};

/// Checks the cost cap (if any), then the knapsack-cover row of every group
/// for A = {v : x_v >= 1/6 - kFeasTol}.
SeparationResult separate(const Instance& inst, const std::vector<double>& x,
                          std::optional<double> cost_cap = std::nullopt);

enum class SolveMode { kDirect, kDeltaSearch };

struct PvcLpOptions {
  SolveMode mode = SolveMode::kDirect;
  /// One line per added cut: group, |A|, rhs, lhs at violation.
  std::ostream* cut_log = nullptr;
  /// Maximum cuts per cutting-plane loop; 0 means 200 * r.
  int cut_limit = 0;
  /// Also carry the natural relaxation's edge variables and rows, so the
  /// bound never falls below solve_lp1. Off gives the x-only relaxation.
  bool include_natural_rows = true;
};

struct FractionalSolution {
  std::vector<double> x;
  std::vector<double> y;  // edge variables; empty without natural rows
  double objective = 0.0;
  std::vector<KnapsackCoverConstraint> certificate;
  int lp_solves = 0;
  int cuts = 0;  // rows added by separation, after the initial A = {} rows
  bool stalled = false;
  /// LP value after each solve of the (final) cutting-plane loop.
  std::vector<double> objective_trace;
  /// Smallest feasible cap found by delta search; unset in direct mode.
  std::optional<Cost> delta;
};

/// Solves the knapsack-cover relaxation by lazy cut generation. The returned
/// x separates clean, and values within kFeasTol below 1/6 are lifted to
/// exactly 1/6 so the rounding sees the same suppressed set as separation.
/// Throws SolverError when the cut limit is exceeded.
FractionalSolution solve_pvclp(const Instance& inst, const PvcLpOptions& options = {});

struct Lp1Solution {
  std::vector<double> x;  // per vertex
  std::vector<double> y;  // per edge
  double objective = 0.0;
};

/// Natural relaxation with edge variables:
///   x_u + x_v >= y_e,  sum_{e in P_i} w_e y_e >= target_i,  x, y in [0,1].
Lp1Solution solve_lp1(const Instance& inst);

}  // namespace pvc
