#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pvc/generators.hpp"
#include "pvc/instance.hpp"
#include "pvc/pvclp.hpp"

namespace pvc {

struct BenchConfig {
  int instances = 50;
  std::uint64_t seed = 1;
  int min_vertices = 4;
  int max_vertices = 16;
  int max_edges = 24;
  int max_groups = 4;
  Cost cost_min = 1;
  Cost cost_max = 10;
  Weight weight_min = 1;
  Weight weight_max = 1;
  double overlap_probability = 0.0;
  int rounds_constant = 4;
  int coverage_trials = 2000;
  int exact_limit = 24;
  SolveMode mode = SolveMode::kDirect;
  bool with_timing = false;
};

struct BenchRecord {
  int instance = 0;
  int n = 0;
  int m = 0;
  int r = 0;
  std::uint64_t seed = 0;  // instance generator seed
  std::optional<double> lp1;
  std::optional<double> pvclp;
  std::optional<Cost> rounded;
  std::optional<Cost> exact;
  std::optional<Cost> greedy;
  int rounds = 0;
  int restarts = 0;
  std::optional<double> min_coverage_frequency;
  std::string status = "ok";
  double seconds_lp1 = 0, seconds_pvclp = 0, seconds_rounding = 0, seconds_exact = 0,
         seconds_greedy = 0;

  /// lp1 <= pvclp <= exact <= rounded, within kOptTol, over present fields.
  bool sandwich_holds() const;
};

struct BenchSummary {
  int rows = 0;
  int failed = 0;
  std::optional<double> max_ratio;   // rounded / exact
  std::optional<double> mean_ratio;
  std::optional<double> min_coverage_frequency;
};

/// Instance i draws its sizes from derive_seed(seed, 4i), is generated from
/// derive_seed(seed, 4i+1), rounded with derive_seed(seed, 4i+2) and checked
/// against the single-round bound with derive_seed(seed, 4i+3).
BenchRecord bench_instance(const BenchConfig& config, int index);
std::vector<BenchRecord> run_bench(const BenchConfig& config);
BenchSummary summarize(const std::vector<BenchRecord>& records);

/// CSV with a versioned comment header. A "#aggregate" footer follows the
/// rows when there is at least one.
std::string bench_csv(const std::vector<BenchRecord>& records, bool with_timing);

struct GapRow {
  int degree = 0;
  double lp1 = 0.0;
  double pvclp = 0.0;
  Cost exact = 0;
};

GapRow gap_row(int degree);
std::string gap_table(const std::vector<GapRow>& rows);

}  // namespace pvc
