#include "pvc/pvclp.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>

#include "pvc/constants.hpp"
#include "pvc/errors.hpp"
#include "pvc/lp.hpp"

namespace pvc {

double KnapsackCoverConstraint::lhs(const std::vector<double>& x) const {
  double sum = 0.0;
  for (const auto& [v, a] : coefficients) sum += static_cast<double>(a) * x[v];
  return sum;
}

Weight residual(const Instance& inst, int group, const std::vector<bool>& in_a) {
  Weight covered = 0;
  for (EdgeId e : inst.group(group).edges) {
    const Edge& edge = inst.edge(e);
    if (in_a[edge.u] || in_a[edge.v]) covered += edge.weight;
  }
  return std::max<Weight>(0, inst.group(group).target - covered);
}

Weight residual(const Instance& inst, int group, const VertexSet& a) {
  return residual(inst, group, to_mask(inst.num_vertices(), a));
}

Weight wdeg(const Instance& inst, int group, VertexId v, const std::vector<bool>& in_a) {
  if (in_a[v]) throw std::invalid_argument("wdeg: vertex " + std::to_string(v) + " is in A");
  Weight d = 0;
  for (EdgeId e : inst.incident(group, v)) {
    const Edge& edge = inst.edge(e);
    const VertexId other = edge.u == v ? edge.v : edge.u;
    if (!in_a[other]) d += edge.weight;
  }
  return d;
}

Weight wdeg(const Instance& inst, int group, VertexId v, const VertexSet& a) {
  return wdeg(inst, group, v, to_mask(inst.num_vertices(), a));
}

std::optional<KnapsackCoverConstraint> build_kc_constraint(const Instance& inst, int group,
                                                           const std::vector<bool>& in_a) {
  const Weight need = residual(inst, group, in_a);
  if (need == 0) return std::nullopt;
  KnapsackCoverConstraint row;
  row.group = group;
  row.suppressed = to_set(in_a);
  row.rhs = need;
  for (VertexId v = 0; v < inst.num_vertices(); ++v) {
    if (in_a[v]) continue;
    const Weight coef = std::min(need, wdeg(inst, group, v, in_a));
    if (coef > 0) row.coefficients.emplace_back(v, coef);
  }
  return row;
}

std::optional<KnapsackCoverConstraint> build_kc_constraint(const Instance& inst, int group,
                                                           const VertexSet& a) {
  return build_kc_constraint(inst, group, to_mask(inst.num_vertices(), a));
}

std::vector<bool> threshold_set(const std::vector<double>& x, double tolerance) {
  std::vector<bool> in_a(x.size());
  for (std::size_t v = 0; v < x.size(); ++v) in_a[v] = x[v] >= kThreshold - tolerance;
  return in_a;
}

SeparationResult separate(const Instance& inst, const std::vector<double>& x,
                          std::optional<double> cost_cap) {
  if (static_cast<int>(x.size()) != inst.num_vertices()) {
    throw std::invalid_argument("separate: x has wrong length");
  }
  SeparationResult result;
  for (VertexId v = 0; v < inst.num_vertices(); ++v) {
    result.cost += static_cast<double>(inst.cost(v)) * x[v];
  }

  const std::vector<bool> none(inst.num_vertices(), false);
  result.empty_set_row_holds.resize(inst.num_groups());
  for (int i = 0; i < inst.num_groups(); ++i) {
    const auto row = build_kc_constraint(inst, i, none);
    result.empty_set_row_holds[i] = !row || row->lhs(x) >= static_cast<double>(row->rhs) - kFeasTol;
  }

  if (cost_cap && result.cost > *cost_cap + kFeasTol) {
    result.status = SeparationStatus::kCostCapViolated;
    return result;
  }

  const std::vector<bool> in_a = threshold_set(x, kFeasTol);
  for (int i = 0; i < inst.num_groups(); ++i) {
    auto row = build_kc_constraint(inst, i, in_a);
    if (!row) continue;
    const double lhs = row->lhs(x);
    if (lhs < static_cast<double>(row->rhs) - kFeasTol) {
      result.violated.emplace_back(std::move(*row), lhs);
    }
  }
  if (!result.violated.empty()) {
    result.status = SeparationStatus::kViolated;
    result.cut = result.violated.front().first;
    result.cut_lhs = result.violated.front().second;
  }
  return result;
}

namespace {

LpRow to_lp_row(const KnapsackCoverConstraint& kc) {
  LpRow row;
  row.rhs = static_cast<double>(kc.rhs);
  row.sense = RowSense::kGreaterEqual;
  for (const auto& [v, a] : kc.coefficients) row.coefficients.emplace_back(v, static_cast<double>(a));
  return row;
}

using CutKey = std::pair<int, VertexSet>;

// x_u + x_v >= y_e for grouped edges and sum_{e in P_i} w_e y_e >= target_i,
// with y_e stored at column n + e.
void add_natural_rows(const Instance& inst, LinearProgram& lp) {
  const int n = inst.num_vertices();
  std::vector<bool> grouped(inst.num_edges(), false);
  for (const Group& g : inst.groups()) {
    for (EdgeId e : g.edges) grouped[e] = true;
  }
  for (EdgeId e = 0; e < inst.num_edges(); ++e) {
    if (!grouped[e]) continue;
    const Edge& edge = inst.edge(e);
    lp.add_row({{{edge.u, 1.0}, {edge.v, 1.0}, {n + e, -1.0}}, 0.0, RowSense::kGreaterEqual});
  }
  for (const Group& g : inst.groups()) {
    if (g.target == 0) continue;
    LpRow row;
    row.rhs = static_cast<double>(g.target);
    for (EdgeId e : g.edges) {
      row.coefficients.emplace_back(n + e, static_cast<double>(inst.edge(e).weight));
    }
    lp.add_row(std::move(row));
  }
}

struct LoopResult {
  bool feasible = false;
  std::vector<double> x;
  std::vector<double> y;
  std::vector<KnapsackCoverConstraint> pool;
  std::vector<double> trace;
  int lp_solves = 0;
  int cuts = 0;
  bool stalled = false;
};

// Cutting-plane loop. With a cost cap the objective is dropped and the cap
// becomes a row (feasibility mode); otherwise cost is minimized.
LoopResult cutting_plane_loop(const Instance& inst, std::optional<Cost> cap,
                              const PvcLpOptions& options) {
  const int n = inst.num_vertices();
  const int cut_limit = options.cut_limit > 0 ? options.cut_limit : 200 * inst.num_groups();

  const int num_y = options.include_natural_rows ? inst.num_edges() : 0;
  std::vector<double> objective(n + num_y, 0.0);
  if (!cap) {
    for (VertexId v = 0; v < n; ++v) objective[v] = static_cast<double>(inst.cost(v));
  }
  LinearProgram lp(objective);
  if (options.include_natural_rows) add_natural_rows(inst, lp);
  if (cap) {
    LpRow row;
    row.sense = RowSense::kLessEqual;
    row.rhs = static_cast<double>(*cap);
    for (VertexId v = 0; v < n; ++v) {
      if (inst.cost(v) != 0) row.coefficients.emplace_back(v, static_cast<double>(inst.cost(v)));
    }
    lp.add_row(std::move(row));
  }

  LoopResult out;
  std::set<CutKey> seen;
  const std::vector<bool> none(n, false);
  for (int i = 0; i < inst.num_groups(); ++i) {
    if (auto kc = build_kc_constraint(inst, i, none)) {
      seen.emplace(i, VertexSet{});
      lp.add_row(to_lp_row(*kc));
      out.pool.push_back(std::move(*kc));
    }
  }

  int cuts = 0;
  for (;;) {
    const LpOutcome sol = lp_solve(lp);
    ++out.lp_solves;
    if (sol.status == LpStatus::kInfeasible) {
      out.feasible = false;
      return out;
    }
    out.trace.push_back(sol.value);
    out.x.assign(sol.x.begin(), sol.x.begin() + n);
    out.y.assign(sol.x.begin() + n, sol.x.end());

    const SeparationResult sep = separate(inst, out.x, cap ? std::optional<double>(*cap) : std::nullopt);
    if (sep.status == SeparationStatus::kCostCapViolated) {
      throw SolverError("LP point violates its own cost-cap row");
    }
    if (sep.status == SeparationStatus::kClean) {
      out.feasible = true;
      return out;
    }

    bool added = false;
    for (const auto& [kc, lhs] : sep.violated) {
      if (!seen.emplace(kc.group, kc.suppressed).second) continue;
      if (++cuts > cut_limit) {
        throw SolverError("cut limit of " + std::to_string(cut_limit) + " exceeded");
      }
      if (options.cut_log) {
        *options.cut_log << "cut group=" << kc.group << " |A|=" << kc.suppressed.size()
                         << " rhs=" << kc.rhs << " lhs=" << lhs << '\n';
      }
      lp.add_row(to_lp_row(kc));
      out.pool.push_back(kc);
      out.cuts = cuts;
      added = true;
    }
    if (!added) {
      // Every violated row is already in the LP: boundary flicker at 1/6.
      for (const auto& [kc, lhs] : sep.violated) {
        if (lhs < static_cast<double>(kc.rhs) - 10 * kFeasTol) {
          throw SolverError("cutting-plane loop stalled on a violated row");
        }
      }
      out.stalled = true;
      out.feasible = true;
      return out;
    }
  }
}

FractionalSolution finish(const Instance& inst, LoopResult loop) {
  FractionalSolution fs;
  fs.x = std::move(loop.x);
  fs.y = std::move(loop.y);
  for (double& xv : fs.x) {
    if (xv < kThreshold && xv >= kThreshold - kFeasTol) xv = kThreshold;
  }
  for (VertexId v = 0; v < inst.num_vertices(); ++v) {
    fs.objective += static_cast<double>(inst.cost(v)) * fs.x[v];
  }
  fs.certificate = std::move(loop.pool);
  fs.lp_solves = loop.lp_solves;
  fs.cuts = loop.cuts;
  fs.stalled = loop.stalled;
  fs.objective_trace = std::move(loop.trace);

  std::set<CutKey> keys;
  for (const auto& kc : fs.certificate) keys.emplace(kc.group, kc.suppressed);
  const std::vector<bool> in_a = threshold_set(fs.x, 0.0);
  for (int i = 0; i < inst.num_groups(); ++i) {
    auto kc = build_kc_constraint(inst, i, in_a);
    if (kc && keys.emplace(kc->group, kc->suppressed).second) fs.certificate.push_back(std::move(*kc));
  }
  const double slack = fs.stalled ? 10 * kFeasTol : kFeasTol;
  for (const auto& kc : fs.certificate) {
    if (kc.lhs(fs.x) < static_cast<double>(kc.rhs) - slack) {
      throw SolverError("returned point violates a certificate row for group " +
                        std::to_string(kc.group));
    }
  }
  return fs;
}

}  // namespace

FractionalSolution solve_pvclp(const Instance& inst, const PvcLpOptions& options) {
  if (options.mode == SolveMode::kDirect) {
    LoopResult loop = cutting_plane_loop(inst, std::nullopt, options);
    if (!loop.feasible) throw SolverError("knapsack-cover LP infeasible; instance invariants broken");
    return finish(inst, std::move(loop));
  }

  // Smallest integral cap whose feasibility loop ends clean.
  Cost lo = 0;
  Cost hi = inst.total_cost();
  LoopResult best = cutting_plane_loop(inst, hi, options);
  if (!best.feasible) throw SolverError("knapsack-cover LP infeasible at the full cost cap");
  while (lo < hi) {
    const Cost mid = lo + (hi - lo) / 2;
    LoopResult probe = cutting_plane_loop(inst, mid, options);
    if (probe.feasible) {
      hi = mid;
      best = std::move(probe);
    } else {
      lo = mid + 1;
    }
  }
  FractionalSolution fs = finish(inst, std::move(best));
  fs.delta = hi;
  return fs;
}

Lp1Solution solve_lp1(const Instance& inst) {
  const int n = inst.num_vertices();
  std::vector<double> objective(n + inst.num_edges(), 0.0);
  for (VertexId v = 0; v < n; ++v) objective[v] = static_cast<double>(inst.cost(v));
  LinearProgram lp(objective);
  add_natural_rows(inst, lp);

  const LpOutcome sol = lp_solve(lp);
  if (sol.status != LpStatus::kOptimal) throw SolverError("natural relaxation infeasible");
  Lp1Solution out;
  out.x.assign(sol.x.begin(), sol.x.begin() + n);
  out.y.assign(sol.x.begin() + n, sol.x.end());
  out.objective = sol.value;
  return out;
}

}  // namespace pvc
