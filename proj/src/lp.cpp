#include "pvc/lp.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "pvc/constants.hpp"
#include "pvc/errors.hpp"

namespace pvc {

void LinearProgram::add_row(LpRow row) {
  for (const auto& [j, a] : row.coefficients) {
    if (j < 0 || j >= num_variables()) {
      throw std::out_of_range("LP row references variable " + std::to_string(j));
    }
  }
  rows_.push_back(std::move(row));
}

double LinearProgram::row_activity(int row, const std::vector<double>& x) const {
  double sum = 0.0;
  for (const auto& [j, a] : rows_[row].coefficients) sum += a * x[j];
  return sum;
}

double LinearProgram::max_violation(const std::vector<double>& x) const {
  double worst = 0.0;
  for (double xj : x) worst = std::max({worst, -xj, xj - 1.0});
  for (int i = 0; i < num_rows(); ++i) {
    const double act = row_activity(i, x);
    const double gap = rows_[i].sense == RowSense::kGreaterEqual ? rows_[i].rhs - act
                                                                 : act - rows_[i].rhs;
    worst = std::max(worst, gap);
  }
  return worst;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPivotTol = 1e-9;
constexpr double kReducedCostTol = 1e-9;
constexpr double kTieTol = 1e-12;

// Column layout: [0, n) structural in [0,1]; [n, n+m) row slacks in
// [0, inf); [n+m, n+2m) artificials, [0, inf) in phase one and fixed at 0
// afterwards. Row i reads a_i.x -/+ s_i + tau_i * art_i = b_i.
class Tableau {
 public:
  Tableau(const LinearProgram& lp, const LpOptions& options)
      : lp_(lp),
        options_(options),
        n_(lp.num_variables()),
        m_(lp.num_rows()),
        cols_(n_ + 2 * m_),
        t_(static_cast<std::size_t>(m_) * cols_, 0.0),
        beta_(m_),
        basis_(m_),
        lower_(cols_, 0.0),
        upper_(cols_, kInf),
        at_upper_(cols_, false),
        is_basic_(cols_, false),
        tau_(m_) {
    for (int j = 0; j < n_; ++j) upper_[j] = 1.0;
    for (int i = 0; i < m_; ++i) {
      const LpRow& row = lp.rows()[i];
      tau_[i] = row.rhs < 0.0 ? -1.0 : 1.0;
      for (const auto& [j, a] : row.coefficients) at(i, j) += a * tau_[i];
      at(i, n_ + i) = (row.sense == RowSense::kGreaterEqual ? -1.0 : 1.0) * tau_[i];
      at(i, n_ + m_ + i) = 1.0;
      beta_[i] = row.rhs * tau_[i];
      basis_[i] = n_ + m_ + i;
      is_basic_[n_ + m_ + i] = true;
    }
    max_rhs_ = 1.0;
    for (const LpRow& row : lp.rows()) max_rhs_ = std::max(max_rhs_, std::fabs(row.rhs));
    iteration_cap_ = 50 * (n_ + m_);
  }

  LpOutcome solve() {
    LpOutcome out;
    std::vector<double> phase1(cols_, 0.0);
    for (int i = 0; i < m_; ++i) phase1[n_ + m_ + i] = 1.0;
    run(phase1);
    refresh_basic_values();

    double infeasibility = 0.0;
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] >= n_ + m_) infeasibility += std::max(0.0, beta_[i]);
    }
    out.iterations = iterations_;
    if (infeasibility > kFeasTol * max_rhs_) {
      out.status = LpStatus::kInfeasible;
      return out;
    }

    for (int k = n_ + m_; k < cols_; ++k) {
      upper_[k] = 0.0;
      at_upper_[k] = false;
    }
    std::vector<double> phase2(cols_, 0.0);
    for (int j = 0; j < n_; ++j) phase2[j] = lp_.objective()[j];
    run(phase2);
    refresh_basic_values();

    out.status = LpStatus::kOptimal;
    out.iterations = iterations_;
    out.x.assign(n_, 0.0);
    for (int j = 0; j < n_; ++j) out.x[j] = std::clamp(value(j), 0.0, 1.0);
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_) out.x[basis_[i]] = std::clamp(beta_[i], 0.0, 1.0);
    }
    out.value = 0.0;
    for (int j = 0; j < n_; ++j) out.value += lp_.objective()[j] * out.x[j];
    return out;
  }

 private:
  double& at(int i, int j) { return t_[static_cast<std::size_t>(i) * cols_ + j]; }
  double at(int i, int j) const { return t_[static_cast<std::size_t>(i) * cols_ + j]; }

  // Value of a nonbasic column.
  double value(int j) const { return at_upper_[j] ? upper_[j] : lower_[j]; }

  void run(const std::vector<double>& cost) {
    std::vector<double> reduced(cols_);
    for (;;) {
      // Reduced costs d_j = c_j - c_B^T T_j.
      for (int j = 0; j < cols_; ++j) reduced[j] = cost[j];
      for (int i = 0; i < m_; ++i) {
        const double cb = cost[basis_[i]];
        if (cb == 0.0) continue;
        for (int j = 0; j < cols_; ++j) reduced[j] -= cb * at(i, j);
      }

      int enter = -1;
      for (int j = 0; j < cols_; ++j) {
        if (is_basic_[j] || upper_[j] <= lower_[j]) continue;
        if ((!at_upper_[j] && reduced[j] < -kReducedCostTol) ||
            (at_upper_[j] && reduced[j] > kReducedCostTol)) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return;

      if (++iterations_ > iteration_cap_) {
        throw IterationLimitError("simplex exceeded " + std::to_string(iteration_cap_) +
                                  " iterations");
      }

      const double dir = at_upper_[enter] ? -1.0 : 1.0;
      double step = upper_[enter] - lower_[enter];
      int leave_row = -1;
      bool leave_to_upper = false;
      for (int i = 0; i < m_; ++i) {
        const double a = dir * at(i, enter);
        const int b = basis_[i];
        double ratio;
        bool to_upper;
        if (a > kPivotTol) {
          ratio = (beta_[i] - lower_[b]) / a;
          to_upper = false;
        } else if (a < -kPivotTol && upper_[b] < kInf) {
          ratio = (upper_[b] - beta_[i]) / -a;
          to_upper = true;
        } else {
          continue;
        }
        ratio = std::max(ratio, 0.0);
        const bool better = ratio < step - kTieTol;
        const bool tie = std::fabs(ratio - step) <= kTieTol && leave_row >= 0 &&
                         b < basis_[leave_row];
        if (better || tie) {
          step = ratio;
          leave_row = i;
          leave_to_upper = to_upper;
        }
      }
      if (step == kInf) throw SolverError("LP unbounded; impossible for a boxed program");

      if (options_.trace) {
        *options_.trace << "iter " << iterations_ << " enter " << enter << " leave "
                        << (leave_row < 0 ? -1 : basis_[leave_row]) << " step " << step << '\n';
      }

      for (int i = 0; i < m_; ++i) beta_[i] -= dir * step * at(i, enter);

      if (leave_row < 0) {
        at_upper_[enter] = !at_upper_[enter];
        continue;
      }

      const double entering_value =
          dir > 0 ? lower_[enter] + step : upper_[enter] - step;
      const int leaving = basis_[leave_row];
      is_basic_[leaving] = false;
      at_upper_[leaving] = leave_to_upper;
      is_basic_[enter] = true;
      at_upper_[enter] = false;
      basis_[leave_row] = enter;
      pivot(leave_row, enter);
      beta_[leave_row] = entering_value;

      if (options_.trace) dump(*options_.trace);
    }
  }

  void pivot(int r, int s) {
    const double inv = 1.0 / at(r, s);
    for (int j = 0; j < cols_; ++j) at(r, j) *= inv;
    at(r, s) = 1.0;
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      const double f = at(i, s);
      if (f == 0.0) continue;
      for (int j = 0; j < cols_; ++j) at(i, j) -= f * at(r, j);
      at(i, s) = 0.0;
    }
  }

  // beta = B^-1 (b - N x_N). B^-1 is the artificial block scaled by tau.
  void refresh_basic_values() {
    std::vector<double> resid(m_);
    for (int k = 0; k < m_; ++k) {
      const LpRow& row = lp_.rows()[k];
      double r = row.rhs;
      for (const auto& [j, a] : row.coefficients) {
        if (!is_basic_[j]) r -= a * value(j);
      }
      const int slack = n_ + k;
      if (!is_basic_[slack]) {
        r -= (row.sense == RowSense::kGreaterEqual ? -1.0 : 1.0) * value(slack);
      }
      const int art = n_ + m_ + k;
      if (!is_basic_[art]) r -= tau_[k] * value(art);
      resid[k] = r;
    }
    for (int i = 0; i < m_; ++i) {
      double v = 0.0;
      for (int k = 0; k < m_; ++k) v += at(i, n_ + m_ + k) * tau_[k] * resid[k];
      beta_[i] = v;
    }
  }

  void dump(std::ostream& os) const {
    os << std::setprecision(4);
    for (int i = 0; i < m_; ++i) {
      os << "  [" << std::setw(3) << basis_[i] << "] " << std::setw(9) << beta_[i] << " |";
      for (int j = 0; j < cols_; ++j) os << ' ' << std::setw(7) << at(i, j);
      os << '\n';
    }
  }

  const LinearProgram& lp_;
  const LpOptions& options_;
  int n_;
  int m_;
  int cols_;
  std::vector<double> t_;
  std::vector<double> beta_;
  std::vector<int> basis_;
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<bool> at_upper_;
  std::vector<bool> is_basic_;
  std::vector<double> tau_;
  double max_rhs_ = 1.0;
  int iterations_ = 0;
  int iteration_cap_ = 0;
};

}  // namespace

LpOutcome lp_solve(const LinearProgram& lp, const LpOptions& options) {
  Tableau tableau(lp, options);
  return tableau.solve();
}

}  // namespace pvc
