// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "pvc/bench.hpp"
#include "pvc/constants.hpp"
#include "pvc/errors.hpp"
#include "pvc/exact.hpp"
#include "pvc/generators.hpp"
#include "pvc/lp.hpp"
#include "pvc/pvclp.hpp"
#include "pvc/rng.hpp"
#include "pvc/rounding.hpp"

namespace {

using namespace pvc;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Variant {
  std::string name;
  Weight weight_max = 1;
  double overlap = 0.0;
};

const Variant kPlain{"unit", 1, 0.0};
const Variant kWeighted{"weighted", 9, 0.0};
const Variant kOverlap{"overlap", 1, 0.3};

Instance random_instance(Rng& rng, const Variant& variant, int max_n, int max_r) {
  RandomInstanceConfig cfg;
  cfg.num_vertices = static_cast<int>(rng.uniform_int(4, max_n));
  const int pairs = cfg.num_vertices * (cfg.num_vertices - 1) / 2;
  cfg.num_groups = static_cast<int>(rng.uniform_int(1, std::min(max_r, pairs)));
  cfg.num_edges = static_cast<int>(rng.uniform_int(cfg.num_groups, std::min(2 * cfg.num_vertices, pairs)));
  cfg.weight_min = 1;
  cfg.weight_max = variant.weight_max;
  cfg.overlap_probability = variant.overlap;
  return generate_random(cfg, rng.next());
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// ---------------------------------------------------------------- 1

Outcome star_gap() {
  Outcome out;
  for (int d : {2, 5, 20, 100}) {
    const GapRow row = gap_row(d);
    const bool ok = std::abs(row.lp1 - 1.0 / d) <= 1e-6 && std::abs(row.pvclp - 1.0) <= 1e-6 &&
                    row.exact == 1;
    if (!ok) {
      out.pass = false;
      out.detail += " D=" + std::to_string(d) + "(lp1=" + fmt(row.lp1) + ",pvclp=" + fmt(row.pvclp) +
                    ",exact=" + std::to_string(row.exact) + ")";
    }
  }
  if (out.pass) out.detail = "D in {2,5,20,100}: lp1=1/D, pvclp=1, exact=1";
  return out;
}

// ---------------------------------------------------------------- 2, 3

struct Solved {
  Instance inst;
  FractionalSolution frac;
};

std::vector<Solved> solve_batch(const Variant& variant, std::uint64_t seed, int count, int max_n,
                                int max_r) {
  Rng rng(seed);
  std::vector<Solved> out;
  for (int k = 0; k < count; ++k) {
    Instance inst = random_instance(rng, variant, max_n, max_r);
    FractionalSolution frac = solve_pvclp(inst);
    out.push_back({std::move(inst), std::move(frac)});
  }
  return out;
}

// LP optima almost never leave a positive residual once the threshold set is
// taken, so rounding below 1/6 is rarely exercised by them. These clean points
// are built directly: a random positive direction u scaled to the smallest
// multiple satisfying every A = {} row, kept only if every coordinate stays
// below 1/6. Then A is empty, every vertex is rounded at random, and the
// tightest group has beta-sum exactly 1.
std::vector<Solved> clean_point_batch(const Variant& variant, std::uint64_t seed, int count,
                                      int* draws) {
  Rng rng(seed);
  std::vector<Solved> out;
  *draws = 0;
  while (static_cast<int>(out.size()) < count && *draws < 100000) {
    ++*draws;
    Instance inst = random_instance(rng, variant, 20, 5);
    const int n = inst.num_vertices();
    std::vector<double> u(n);
    for (auto& v : u) v = 0.2 + 0.8 * rng.uniform01();
    double scale = 0.0;
    for (int i = 0; i < inst.num_groups(); ++i) {
      const auto row = build_kc_constraint(inst, i, VertexSet{});
      if (row) scale = std::max(scale, static_cast<double>(row->rhs) / row->lhs(u));
    }
    scale *= 1.0 + 1e-12;
    FractionalSolution point;
    point.x.resize(n);
    bool small = true;
    for (int v = 0; v < n; ++v) {
      point.x[v] = scale * u[v];
      small = small && point.x[v] < kThreshold - 2 * kFeasTol;
      point.objective += static_cast<double>(inst.cost(v)) * point.x[v];
    }
    if (!small || separate(inst, point.x).status != SeparationStatus::kClean) continue;
    out.push_back({std::move(inst), std::move(point)});
  }
  return out;
}

Outcome round_coverage(const std::vector<Solved>& batch, std::uint64_t seed) {
  Outcome out;
  int groups = 0;
  double worst_margin = 1.0;
  double min_freq = 1.0;
  for (std::size_t k = 0; k < batch.size(); ++k) {
    const auto& [inst, frac] = batch[k];
    if (separate(inst, frac.x).status != SeparationStatus::kClean) {
      out.pass = false;
      out.detail += " instance " + std::to_string(k) + " not clean;";
      continue;
    }
    const CoverageEstimate est = estimate_round_coverage(inst, frac.x, 20000, Rng(derive_seed(seed, k)));
    for (std::size_t i = 0; i < est.frequency.size(); ++i) {
      ++groups;
      const double margin = est.frequency[i] - (5.0 / 8.0 - est.radius[i]);
      worst_margin = std::min(worst_margin, margin);
      min_freq = std::min(min_freq, est.frequency[i]);
      if (margin < 0) {
        out.pass = false;
        out.detail += " instance " + std::to_string(k) + " group " + std::to_string(i) +
                      " freq=" + fmt(est.frequency[i]) + ";";
      }
    }
  }
  out.detail += " instances=" + std::to_string(batch.size()) + " groups=" + std::to_string(groups) +
                " trials=20000 min freq=" + fmt(min_freq) +
                " min(freq-(5/8-radius))=" + fmt(worst_margin);
  return out;
}

Outcome beta_inequality(const std::vector<Solved>& batch) {
  Outcome out;
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& [inst, frac] : batch) worst = std::min(worst, min_beta_sum(inst, frac.x));
  out.pass = worst >= 1.0 - 1e-6;
  out.detail = std::isfinite(worst) ? "min beta-sum=" + fmt(worst)
                                     : std::string("no group with positive residual");
  return out;
}

// ---------------------------------------------------------------- 4

Outcome expected_cost(const std::vector<Solved>& batch, std::uint64_t seed) {
  Outcome out;
  constexpr int kTrials = 50000;
  double worst_z = 0.0;
  const std::size_t count = std::min<std::size_t>(batch.size(), 5);
  for (std::size_t k = 0; k < count; ++k) {
    const auto& [inst, frac] = batch[k];
    const double mu = expected_round_cost(inst, frac.x);
    if (mu > 6.0 * frac.objective + 1e-9) {
      out.pass = false;
      out.detail += " instance " + std::to_string(k) + " closed form " + fmt(mu) + " > 6*" +
                    fmt(frac.objective) + ";";
    }
    Rng rng(derive_seed(seed, k));
    double sum = 0, sq = 0;
    for (int t = 0; t < kTrials; ++t) {
      const double c = static_cast<double>(round_once(inst, frac.x, rng).cost);
      sum += c;
      sq += c * c;
    }
    const double mean = sum / kTrials;
    const double se = std::sqrt(std::max(0.0, sq / kTrials - mean * mean) / kTrials);
    const double diff = std::abs(mean - mu);
    if (se > 0) worst_z = std::max(worst_z, diff / se);
    if (diff > 3 * se + 1e-9) {
      out.pass = false;
      out.detail += " instance " + std::to_string(k) + " mean " + fmt(mean) + " vs " + fmt(mu) + ";";
    }
  }
  out.detail += " instances=" + std::to_string(count) + " trials=50000 max|z|=" + fmt(worst_z);
  return out;
}

// ---------------------------------------------------------------- 5

Outcome end_to_end(const Variant& variant, std::uint64_t seed) {
  Outcome out;
  constexpr int kSolves = 200;
  constexpr int kC = 4;
  Rng rng(seed);
  int first_failures = 0;
  int bound_violations = 0;
  double worst = 0.0;
  for (int k = 0; k < kSolves; ++k) {
    const Instance inst = random_instance(rng, variant, 20, 8);
    const FractionalSolution frac = solve_pvclp(inst);
    RoundingConfig cfg;
    cfg.seed = derive_seed(seed, k);
    cfg.rounds_constant = kC;
    const int r = inst.num_groups();
    const double bound = 6.0 * kC * std::ceil(std::log2(r + 1.0)) * frac.objective;
    try {
      const RoundedSolution sol = solve_rounded(inst, frac, cfg);
      first_failures += !sol.report.first_attempt_feasible;
      const double cost = static_cast<double>(sol.report.cost);
      if (bound > 0) worst = std::max(worst, cost / bound);
      if (cost > bound + kOptTol) ++bound_violations;
    } catch (const InfeasibleAfterRestartsError&) {
      ++first_failures;
      ++bound_violations;
    }
  }
  const double rate = static_cast<double>(first_failures) / kSolves;
  out.pass = rate < 0.05 && bound_violations == 0;
  out.detail = "solves=200 first-attempt failure rate=" + fmt(rate) +
               " cost-bound violations=" + std::to_string(bound_violations) +
               " max cost/bound=" + fmt(worst);
  return out;
}

// ---------------------------------------------------------------- 6

Outcome sandwich(const Variant& variant, std::uint64_t seed, std::vector<std::vector<double>>* traces) {
  Outcome out;
  Rng rng(seed);
  double max_ratio = 0.0;
  double sum_ratio = 0.0;
  int violations = 0;
  for (int k = 0; k < 50; ++k) {
    const Instance inst = random_instance(rng, variant, 16, 5);
    const double lp1 = solve_lp1(inst).objective;
    const FractionalSolution frac = solve_pvclp(inst);
    traces->push_back(frac.objective_trace);
    const Cost opt = exact_solve(inst).optimum;
    RoundingConfig cfg;
    cfg.seed = derive_seed(seed, k);
    Cost rounded = 0;
    try {
      rounded = solve_rounded(inst, frac, cfg).report.cost;
    } catch (const InfeasibleAfterRestartsError&) {
      ++violations;
      continue;
    }
    const bool ok = lp1 <= frac.objective + kOptTol &&
                    frac.objective <= static_cast<double>(opt) + kOptTol && opt <= rounded;
    if (!ok) {
      ++violations;
      out.detail += " instance " + std::to_string(k) + "(" + fmt(lp1) + "," + fmt(frac.objective) +
                    "," + std::to_string(opt) + "," + std::to_string(rounded) + ");";
    }
    const double ratio = opt > 0 ? static_cast<double>(rounded) / static_cast<double>(opt) : 1.0;
    max_ratio = std::max(max_ratio, ratio);
    sum_ratio += ratio;
  }
  out.pass = violations == 0;
  out.detail += " instances=50 violations=" + std::to_string(violations) +
                " max rounded/exact=" + fmt(max_ratio) + " mean=" + fmt(sum_ratio / 50);
  return out;
}

// ---------------------------------------------------------------- 7

Outcome reduction() {
  Outcome out;
  Rng rng(707);
  int mismatches = 0;
  for (int k = 0; k < 20; ++k) {
    const int elements = static_cast<int>(rng.uniform_int(1, 6));
    const int sets = static_cast<int>(rng.uniform_int(1, 6));
    const SetCoverInstance sc = generate_set_cover(elements, sets, 9, rng.next());
    const Cost expected = oracle::set_cover_brute_force(sc);
    const Cost got = exact_solve(reduce_set_cover(sc)).optimum;
    if (expected != got) {
      ++mismatches;
      out.detail += " instance " + std::to_string(k) + " " + std::to_string(expected) + "!=" +
                    std::to_string(got) + ";";
    }
  }
  out.pass = mismatches == 0;
  out.detail += " instances=20 mismatches=" + std::to_string(mismatches);
  return out;
}

// ---------------------------------------------------------------- 8

Outcome lp_kernel(const std::vector<std::vector<double>>& traces) {
  Outcome out;
  Rng rng(808);
  int mismatches = 0;
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const int n = static_cast<int>(rng.uniform_int(1, 4));
    const int m = static_cast<int>(rng.uniform_int(0, 6));
    std::vector<double> c(n);
    for (auto& v : c) v = static_cast<double>(rng.uniform_int(-5, 9));
    LinearProgram lp(c);
    for (int i = 0; i < m; ++i) {
      LpRow row;
      for (int j = 0; j < n; ++j) {
        const auto a = rng.uniform_int(-3, 4);
        if (a != 0) row.coefficients.emplace_back(j, static_cast<double>(a));
      }
      row.rhs = static_cast<double>(rng.uniform_int(-3, 5)) / 2.0;
      row.sense = rng.bernoulli(0.7) ? RowSense::kGreaterEqual : RowSense::kLessEqual;
      lp.add_row(std::move(row));
    }
    const auto expected = oracle::lp_by_vertex_enumeration(lp);
    const LpOutcome got = lp_solve(lp);
    bool ok = expected.has_value() == (got.status == LpStatus::kOptimal);
    if (ok && expected) {
      worst = std::max(worst, std::abs(got.value - *expected));
      ok = std::abs(got.value - *expected) <= 1e-6;
    }
    mismatches += !ok;
  }
  int trace_violations = 0;
  for (const auto& trace : traces) {
    for (std::size_t k = 1; k < trace.size(); ++k) trace_violations += trace[k] < trace[k - 1] - 1e-9;
  }
  out.pass = mismatches == 0 && trace_violations == 0;
  out.detail = "lps=100 mismatches=" + std::to_string(mismatches) + " max|diff|=" + fmt(worst) +
               " traces=" + std::to_string(traces.size()) +
               " monotonicity violations=" + std::to_string(trace_violations);
  return out;
}

// ---------------------------------------------------------------- 9

std::string run(const std::string& cmd, int* status) {
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  std::string text;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) text.append(buf.data(), n);
  *status = WEXITSTATUS(pclose(pipe));
  return text;
}

Outcome determinism() {
  Outcome out;
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "pvc_acceptance";
  fs::create_directories(dir);
  const std::string cli = PVC_CLI_PATH;
  const std::string inst = (dir / "random.pvc").string();
  const std::string weighted = (dir / "weighted.pvc").string();
  const std::string sc = (dir / "sc.txt").string();
  int status = 0;
  run(cli + " generate random -n 14 -m 24 -r 4 --seed 3 --out " + inst, &status);
  run(cli + " generate random -n 12 -m 20 -r 3 --weight-max 6 --overlap 0.2 --seed 4 --out " + weighted,
      &status);
  run(cli + " generate setcover --elements 5 --sets 5 --cost-max 4 --seed 5 --out " + sc, &status);
  const std::vector<std::string> commands{
      "solve " + inst + " --seed 11",
      "solve " + inst + " --seed 11 --mode delta --prune",
      "solve " + weighted + " --seed 12 --rounds-constant 2",
      "exact " + inst,
      "greedy " + weighted,
      "lp1 " + inst,
      "verify " + weighted + " --seed 9 --trials 2000",
      "generate star --degree 7",
      "generate random -n 10 -m 15 -r 3 --seed 21",
      "generate setcover-reduce " + sc,
      "bench --trials 8 --seed 5 --mc-trials 200",
      "gap",
  };
  int differing = 0;
  for (const auto& args : commands) {
    int s1 = 0, s2 = 0;
    const std::string a = run(cli + " " + args, &s1);
    const std::string b = run(cli + " " + args, &s2);
    if (a != b || s1 != s2 || s1 != 0 || a.empty()) {
      ++differing;
      out.detail += " [" + args + "] exit " + std::to_string(s1) + "/" + std::to_string(s2) + ";";
    }
  }
  std::error_code ec;
  fs::remove_all(dir, ec);
  out.pass = differing == 0;
  out.detail += " invocations=" + std::to_string(commands.size()) + " differing=" + std::to_string(differing);
  return out;
}

}  // namespace

int main() {
  bool all = true;
  auto report = [&all](const std::string& label, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = body();
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && out.pass;
    out.detail.erase(0, out.detail.find_first_not_of(' '));
    std::cout << (out.pass ? "PASS " : "FAIL ") << label << ": " << out.detail << " (" << fmt(secs)
              << " s)" << std::endl;
  };

  std::vector<std::vector<double>> traces;
  for (const Variant* variant : {&kPlain, &kWeighted, &kOverlap}) {
    const bool base = variant == &kPlain;
    const std::string tag = base ? "" : " [10" + std::string(variant == &kWeighted ? "a " : "b ") +
                                            variant->name + "]";
    if (base) report("criterion 1 star gap", star_gap);
    const std::uint64_t seed = base ? 1000 : (variant == &kWeighted ? 2000 : 3000);
    std::vector<Solved> batch;
    std::vector<Solved> points;
    int draws = 0;
    report("criterion 2 single-round coverage" + tag, [&] {
      batch = solve_batch(*variant, seed, 24, 20, 5);
      for (const auto& s : batch) traces.push_back(s.frac.objective_trace);
      points = clean_point_batch(*variant, seed + 5, 20, &draws);
      Outcome lp = round_coverage(batch, seed + 1);
      Outcome hard = round_coverage(points, seed + 6);
      Outcome out;
      out.pass = lp.pass && hard.pass && points.size() >= 20;
      out.detail = " lp-optima{" + lp.detail + " } clean-points{" + hard.detail +
                   " draws=" + std::to_string(draws) + " }";
      return out;
    });
    report("criterion 3 beta-sum inequality" + tag, [&] {
      Outcome lp = beta_inequality(batch);
      Outcome hard = beta_inequality(points);
      return Outcome{lp.pass && hard.pass, " lp-optima " + lp.detail + ", clean-points " + hard.detail};
    });
    report("criterion 4 expected round cost" + tag, [&] {
      Outcome lp = expected_cost(batch, seed + 2);
      Outcome hard = expected_cost(points, seed + 7);
      return Outcome{lp.pass && hard.pass,
                     " lp-optima{" + lp.detail + " } clean-points{" + hard.detail + " }"};
    });
    report("criterion 5 end-to-end rounding" + tag, [&] { return end_to_end(*variant, seed + 3); });
    report("criterion 6 sandwich and ratio" + tag, [&] { return sandwich(*variant, seed + 4, &traces); });
  }
  report("criterion 7 set cover reduction", reduction);
  report("criterion 8 LP kernel", [&] { return lp_kernel(traces); });
  report("criterion 9 CLI determinism", determinism);
  std::cout << (all ? "ALL PASS" : "SOME FAILED") << std::endl;
  return all ? 0 : 1;
}
