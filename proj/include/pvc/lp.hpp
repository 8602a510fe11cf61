#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

namespace pvc {

enum class RowSense { kGreaterEqual, kLessEqual };

struct LpRow {
  std::vector<std::pair<int, double>> coefficients;  // (variable, value)
  double rhs = 0.0;
  RowSense sense = RowSense::kGreaterEqual;
};

/// minimize c.x  subject to  rows,  0 <= x <= 1.
///
/// Rows are append-only; a program can be re-solved after each add_row.
class LinearProgram {
 public:
  explicit LinearProgram(std::vector<double> objective) : objective_(std::move(objective)) {}

  int num_variables() const { return static_cast<int>(objective_.size()); }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  const std::vector<double>& objective() const { return objective_; }
  const std::vector<LpRow>& rows() const { return rows_; }

  /// Throws std::out_of_range if the row references an unknown variable.
  void add_row(LpRow row);

  double row_activity(int row, const std::vector<double>& x) const;
  /// Largest violation of any row or bound at x (0 when feasible).
  double max_violation(const std::vector<double>& x) const;

 private:
  std::vector<double> objective_;
  std::vector<LpRow> rows_;
};

enum class LpStatus { kOptimal, kInfeasible };

struct LpOutcome {
  LpStatus status = LpStatus::kInfeasible;
  double value = 0.0;
  std::vector<double> x;  // clamped to [0,1]; empty when infeasible
  int iterations = 0;
};

struct LpOptions {
  /// When set, each pivot and the tableau are dumped here.
  std::ostream* trace = nullptr;
};

/// Two-phase bounded-variable primal simplex on a dense tableau, Bland's rule
/// for both entering and leaving choices. Deterministic. Throws
/// IterationLimitError after 50 * (variables + rows) pivots.
LpOutcome lp_solve(const LinearProgram& lp, const LpOptions& options = {});

}  // namespace pvc
