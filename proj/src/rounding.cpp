#include "pvc/rounding.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "pvc/errors.hpp"

namespace pvc {

static_assert(kRoundingScale * kThreshold == 1.0,
              "rounding scale and separation threshold must be reciprocal");

VertexSelection make_selection(const Instance& inst, VertexSet chosen) {
  VertexSelection sel;
  sel.chosen = std::move(chosen);
  sel.cost = set_cost(inst, sel.chosen);
  sel.covered = coverage(inst, sel.chosen);
  sel.feasible = true;
  for (int i = 0; i < inst.num_groups(); ++i) {
    if (sel.covered[i] < inst.group(i).target) sel.feasible = false;
  }
  return sel;
}

int rounds_for(int num_groups, int rounds_constant) {
  if (rounds_constant < 1) throw std::invalid_argument("rounds constant must be positive");
  const auto groups = static_cast<unsigned>(std::max(num_groups, 0));
  const int log2_ceil = static_cast<int>(std::bit_width(groups));  // ceil(log2(r+1))
  return std::max(1, rounds_constant * log2_ceil);
}

namespace {

std::vector<bool> round_mask(const std::vector<double>& x, Rng& rng) {
  std::vector<bool> picked(x.size(), false);
  for (std::size_t v = 0; v < x.size(); ++v) {
    const double u = rng.uniform01();
    picked[v] = x[v] >= kThreshold || u < kRoundingScale * x[v];
  }
  return picked;
}

}  // namespace

VertexSelection round_once(const Instance& inst, const std::vector<double>& x, Rng& rng) {
  return make_selection(inst, to_set(round_mask(x, rng)));
}

double expected_round_cost(const Instance& inst, const std::vector<double>& x) {
  double total = 0.0;
  for (VertexId v = 0; v < inst.num_vertices(); ++v) {
    total += std::min(1.0, kRoundingScale * x[v]) * static_cast<double>(inst.cost(v));
  }
  return total;
}

std::optional<double> beta_sum(const Instance& inst, int group, const std::vector<double>& x) {
  const std::vector<bool> in_a = threshold_set(x, 0.0);
  const Weight need = residual(inst, group, in_a);
  if (need == 0) return std::nullopt;
  double sum = 0.0;
  for (VertexId v = 0; v < inst.num_vertices(); ++v) {
    if (in_a[v]) continue;
    const Weight d = std::min(need, wdeg(inst, group, v, in_a));
    sum += static_cast<double>(d) / static_cast<double>(need) * x[v];
  }
  return sum;
}

double min_beta_sum(const Instance& inst, const std::vector<double>& x) {
  double lowest = std::numeric_limits<double>::infinity();
  for (int i = 0; i < inst.num_groups(); ++i) {
    if (auto s = beta_sum(inst, i, x)) lowest = std::min(lowest, *s);
  }
  return lowest;
}

VertexSelection prune_selection(const Instance& inst, const VertexSelection& selection) {
  std::vector<VertexId> order = selection.chosen;
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return inst.cost(a) != inst.cost(b) ? inst.cost(a) > inst.cost(b) : a > b;
  });
  std::vector<bool> mask = to_mask(inst.num_vertices(), selection.chosen);
  for (VertexId v : order) {
    mask[v] = false;
    if (!is_feasible(inst, mask)) mask[v] = true;
  }
  return make_selection(inst, to_set(mask));
}

RoundedSolution solve_rounded(const Instance& inst, const FractionalSolution& fractional,
                              const RoundingConfig& config) {
  if (static_cast<int>(fractional.x.size()) != inst.num_vertices()) {
    throw std::invalid_argument("fractional solution has wrong length");
  }
  if (config.max_restarts < 0) throw std::invalid_argument("max restarts must be non-negative");
  if (min_beta_sum(inst, fractional.x) < 1.0 - 1e-6) {
    throw std::invalid_argument("fractional point fails the beta-sum precondition; not clean");
  }

  const auto start = std::chrono::steady_clock::now();
  const int rounds = rounds_for(inst.num_groups(), config.rounds_constant);
  const Rng base(config.seed);

  RoundedSolution out;
  SolveReport& rep = out.report;
  rep.lp_value = fractional.objective;
  rep.rounds = rounds;
  rep.seed = config.seed;
  for (const Group& g : inst.groups()) rep.targets.push_back(g.target);

  for (int attempt = 0; attempt <= config.max_restarts; ++attempt) {
    const Rng stream = base.substream(static_cast<std::uint64_t>(attempt));
    std::vector<bool> chosen(inst.num_vertices(), false);
    for (int t = 0; t < rounds; ++t) {
      Rng round_rng = stream.substream(static_cast<std::uint64_t>(t));
      const std::vector<bool> picked = round_mask(fractional.x, round_rng);
      for (std::size_t v = 0; v < picked.size(); ++v) chosen[v] = chosen[v] || picked[v];
    }
    VertexSelection sel = make_selection(inst, to_set(chosen));
    if (attempt == 0) rep.first_attempt_feasible = sel.feasible;
    if (sel.feasible) {
      rep.restarts = attempt;
      out.selection = std::move(sel);
      break;
    }
    if (attempt == config.max_restarts) {
      throw InfeasibleAfterRestartsError("rounding infeasible after " +
                                         std::to_string(config.max_restarts) + " restarts");
    }
  }

  rep.feasible = true;
  rep.cost = out.selection.cost;
  rep.covered = out.selection.covered;
  rep.chosen = out.selection.chosen;
  rep.ratio = fractional.objective > 0.0
                  ? static_cast<double>(rep.cost) / fractional.objective
                  : 0.0;
  if (config.prune) {
    out.pruned = prune_selection(inst, out.selection);
    rep.pruned_cost = out.pruned->cost;
  }
  rep.rounding_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

std::string SolveReport::to_text(bool with_timing) const {
  auto fmt = [](double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9f", v);
    return std::string(buf);
  };
  std::ostringstream out;
  out << "status " << (feasible ? "feasible" : "infeasible") << '\n';
  out << "seed " << seed << '\n';
  out << "lp_value " << fmt(lp_value) << '\n';
  out << "rounds " << rounds << '\n';
  out << "restarts " << restarts << '\n';
  out << "first_attempt_feasible " << (first_attempt_feasible ? 1 : 0) << '\n';
  out << "cost " << cost << '\n';
  out << "ratio " << fmt(ratio) << '\n';
  if (pruned_cost) out << "pruned_cost " << *pruned_cost << '\n';
  out << "chosen";
  for (VertexId v : chosen) out << ' ' << v;
  out << '\n';
  out << "coverage";
  for (std::size_t i = 0; i < covered.size(); ++i) out << ' ' << covered[i] << '/' << targets[i];
  out << '\n';
  if (with_timing) {
    out << "lp_seconds " << fmt(lp_seconds) << '\n';
    out << "rounding_seconds " << fmt(rounding_seconds) << '\n';
  }
  return out.str();
}

CoverageEstimate estimate_round_coverage(const Instance& inst, const std::vector<double>& x, int trials,
                                 const Rng& rng) {
  if (trials < 0) throw std::invalid_argument("trials must be non-negative");
  const int r = inst.num_groups();
  CoverageEstimate est;
  est.trials = trials;
  std::vector<long long> hits(r, 0);
  for (int t = 0; t < trials; ++t) {
    Rng trial_rng = rng.substream(static_cast<std::uint64_t>(t));
    const auto covered = coverage(inst, round_mask(x, trial_rng));
    for (int i = 0; i < r; ++i) {
      if (covered[i] >= inst.group(i).target) ++hits[i];
    }
  }
  constexpr double kZ99 = 2.5758293035489004;
  est.frequency.resize(r, 0.0);
  est.radius.resize(r, 0.0);
  for (int i = 0; i < r; ++i) {
    if (trials == 0) continue;
    const double p = static_cast<double>(hits[i]) / trials;
    est.frequency[i] = p;
    est.radius[i] = kZ99 * std::sqrt(p * (1.0 - p) / trials);
  }
  return est;
}

}  // namespace pvc
