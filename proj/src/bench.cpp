#include "pvc/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <sstream>

#include "pvc/constants.hpp"
#include "pvc/exact.hpp"
#include "pvc/greedy.hpp"
#include "pvc/rng.hpp"
#include "pvc/rounding.hpp"

namespace pvc {
namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}

template <class T>
std::string cell(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_floating_point_v<T>) {
    return fixed(*v);
  } else {
    return std::to_string(*v);
  }
}

}  // namespace

bool BenchRecord::sandwich_holds() const {
  std::vector<double> chain;
  if (lp1) chain.push_back(*lp1);
  if (pvclp) chain.push_back(*pvclp);
  if (exact) chain.push_back(static_cast<double>(*exact));
  if (rounded) chain.push_back(static_cast<double>(*rounded));
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (chain[i - 1] > chain[i] + kOptTol) return false;
  }
  return true;
}

BenchRecord bench_instance(const BenchConfig& config, int index) {
  BenchRecord rec;
  rec.instance = index;
  const auto base = static_cast<std::uint64_t>(index) * 4;

  Rng sizes(derive_seed(config.seed, base));
  RandomInstanceConfig gen;
  gen.num_vertices = static_cast<int>(sizes.uniform_int(config.min_vertices, config.max_vertices));
  gen.num_groups = static_cast<int>(sizes.uniform_int(1, config.max_groups));
  const int max_m = std::min<int>(config.max_edges, gen.num_vertices * (gen.num_vertices - 1) / 2);
  gen.num_edges = static_cast<int>(sizes.uniform_int(std::min(gen.num_groups, max_m), max_m));
  gen.cost_min = config.cost_min;
  gen.cost_max = config.cost_max;
  gen.weight_min = config.weight_min;
  gen.weight_max = config.weight_max;
  gen.overlap_probability = config.overlap_probability;
  rec.seed = derive_seed(config.seed, base + 1);

  std::string stage = "generate";
  try {
    const Instance inst = generate_random(gen, rec.seed);
    rec.n = inst.num_vertices();
    rec.m = inst.num_edges();
    rec.r = inst.num_groups();

    stage = "lp1";
    auto t0 = Clock::now();
    rec.lp1 = solve_lp1(inst).objective;
    rec.seconds_lp1 = since(t0);

    stage = "pvclp";
    t0 = Clock::now();
    PvcLpOptions lp_options;
    lp_options.mode = config.mode;
    const FractionalSolution fs = solve_pvclp(inst, lp_options);
    rec.pvclp = fs.objective;
    rec.seconds_pvclp = since(t0);

    stage = "rounding";
    t0 = Clock::now();
    RoundingConfig rc;
    rc.seed = derive_seed(config.seed, base + 2);
    rc.rounds_constant = config.rounds_constant;
    const RoundedSolution rounded = solve_rounded(inst, fs, rc);
    rec.rounded = rounded.selection.cost;
    rec.rounds = rounded.report.rounds;
    rec.restarts = rounded.report.restarts;
    if (config.coverage_trials > 0) {
      const auto est = estimate_round_coverage(inst, fs.x, config.coverage_trials,
                                       Rng(derive_seed(config.seed, base + 3)));
      if (!est.frequency.empty()) {
        rec.min_coverage_frequency = *std::min_element(est.frequency.begin(), est.frequency.end());
      }
    }
    rec.seconds_rounding = since(t0);

    stage = "greedy";
    t0 = Clock::now();
    rec.greedy = greedy_solve(inst).cost;
    rec.seconds_greedy = since(t0);

    if (inst.num_vertices() <= config.exact_limit) {
      stage = "exact";
      t0 = Clock::now();
      rec.exact = exact_solve(inst, config.exact_limit).optimum;
      rec.seconds_exact = since(t0);
    }
  } catch (const std::exception&) {
    rec.status = "failed_" + stage;
  }
  return rec;
}

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  std::vector<BenchRecord> records;
  records.reserve(std::max(config.instances, 0));
  for (int i = 0; i < config.instances; ++i) records.push_back(bench_instance(config, i));
  return records;
}

BenchSummary summarize(const std::vector<BenchRecord>& records) {
  BenchSummary s;
  s.rows = static_cast<int>(records.size());
  double sum = 0.0;
  int count = 0;
  for (const auto& rec : records) {
    if (rec.status != "ok") ++s.failed;
    if (rec.rounded && rec.exact && *rec.exact > 0) {
      const double ratio = static_cast<double>(*rec.rounded) / static_cast<double>(*rec.exact);
      s.max_ratio = std::max(s.max_ratio.value_or(ratio), ratio);
      sum += ratio;
      ++count;
    }
    if (rec.min_coverage_frequency) {
      s.min_coverage_frequency =
          std::min(s.min_coverage_frequency.value_or(1.0), *rec.min_coverage_frequency);
    }
  }
  if (count > 0) s.mean_ratio = sum / count;
  return s;
}

std::string bench_csv(const std::vector<BenchRecord>& records, bool with_timing) {
  std::ostringstream out;
  out << "# pvc-bench v1\n";
  out << "instance,n,m,r,lp1,pvclp,rounded,exact,greedy,rounds,restarts,seed,min_cover_freq,"
         "sandwich,status";
  if (with_timing) out << ",sec_lp1,sec_pvclp,sec_rounding,sec_exact,sec_greedy";
  out << '\n';
  for (const auto& rec : records) {
    out << rec.instance << ',' << rec.n << ',' << rec.m << ',' << rec.r << ',' << cell(rec.lp1)
        << ',' << cell(rec.pvclp) << ',' << cell(rec.rounded) << ',' << cell(rec.exact) << ','
        << cell(rec.greedy) << ',' << rec.rounds << ',' << rec.restarts << ',' << rec.seed << ','
        << cell(rec.min_coverage_frequency) << ',' << (rec.sandwich_holds() ? 1 : 0) << ','
        << rec.status;
    if (with_timing) {
      out << ',' << fixed(rec.seconds_lp1) << ',' << fixed(rec.seconds_pvclp) << ','
          << fixed(rec.seconds_rounding) << ',' << fixed(rec.seconds_exact) << ','
          << fixed(rec.seconds_greedy);
    }
    out << '\n';
  }
  if (!records.empty()) {
    const BenchSummary s = summarize(records);
    out << "#aggregate rows=" << s.rows << " failed=" << s.failed
        << " max_rounded_over_exact=" << cell(s.max_ratio)
        << " mean_rounded_over_exact=" << cell(s.mean_ratio)
        << " min_cover_freq=" << cell(s.min_coverage_frequency) << '\n';
  }
  return out.str();
}

GapRow gap_row(int degree) {
  const Instance star = generate_star(degree);
  GapRow row;
  row.degree = degree;
  row.lp1 = solve_lp1(star).objective;
  row.pvclp = solve_pvclp(star).objective;
  row.exact = exact_solve(star, star.num_vertices()).optimum;
  return row;
}

std::string gap_table(const std::vector<GapRow>& rows) {
  std::ostringstream out;
  out << "D lp1 pvclp exact\n";
  for (const auto& row : rows) {
    out << row.degree << ' ' << fixed(row.lp1) << ' ' << fixed(row.pvclp) << ' ' << row.exact
        << '\n';
  }
  return out.str();
}

}  // namespace pvc
