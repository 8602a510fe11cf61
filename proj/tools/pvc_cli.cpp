// pvc: command-line front end for the partition vertex cover solvers.
//
// Exit codes: 0 success, 1 usage error, 2 file or parse error, 3 solver
// error, 4 rounding infeasible after all restarts.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pvc/bench.hpp"
#include "pvc/errors.hpp"
#include "pvc/exact.hpp"
#include "pvc/generators.hpp"
#include "pvc/greedy.hpp"
#include "pvc/instance.hpp"
#include "pvc/pvclp.hpp"
#include "pvc/rounding.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitSolver = 3;
constexpr int kExitInfeasible = 4;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

pvc::Instance load(const std::string& path, bool strict) {
  return pvc::parse_instance(read_file(path), pvc::ValidationOptions{.strict_partition = strict});
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InputError("cannot write " + out_path);
  out << text;
}

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}

std::string join(const pvc::VertexSet& s) {
  std::string out;
  for (pvc::VertexId v : s) out += ' ' + std::to_string(v);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partition vertex cover: knapsack-cover LP, threshold rounding, baselines"};
  app.require_subcommand(1);

  std::string input;
  std::string out_path;
  std::uint64_t seed = 1;
  int rounds_constant = 4;
  std::string mode = "direct";
  bool prune = false;
  bool strict = false;
  bool timing = false;
  int trials = 20000;
  int limit = 24;
  bool cut_log = false;

  // solve
  auto* solve = app.add_subcommand("solve", "Solve the LP relaxation and round it");
  solve->add_option("input", input, "Instance file")->required();
  solve->add_option("--seed", seed, "Random seed");
  solve->add_option("--rounds-constant", rounds_constant, "Rounds = c * ceil(log2(r+1))")
      ->check(CLI::PositiveNumber);
  solve->add_option("--mode", mode, "LP mode")->check(CLI::IsMember({"direct", "delta"}));
  solve->add_flag("--prune", prune, "Also report a greedily pruned solution");
  solve->add_flag("--strict-partition", strict, "Require groups to partition the edges");
  solve->add_flag("--timing", timing, "Include wall-clock timings");
  solve->add_flag("--cut-log", cut_log, "Log every added cut to stderr");
  solve->add_option("--out", out_path, "Write report here instead of stdout");

  auto* exact = app.add_subcommand("exact", "Exact optimum by branch and bound");
  exact->add_option("input", input, "Instance file")->required();
  exact->add_option("--limit", limit, "Maximum vertex count");
  exact->add_flag("--strict-partition", strict);
  exact->add_option("--out", out_path);

  auto* greedy = app.add_subcommand("greedy", "Greedy baseline");
  greedy->add_option("input", input, "Instance file")->required();
  greedy->add_flag("--strict-partition", strict);
  greedy->add_option("--out", out_path);

  auto* lp1 = app.add_subcommand("lp1", "Natural LP relaxation with edge variables");
  lp1->add_option("input", input, "Instance file")->required();
  lp1->add_flag("--strict-partition", strict);
  lp1->add_option("--out", out_path);

  auto* verify = app.add_subcommand("verify", "Monte Carlo single-round coverage check");
  verify->add_option("input", input, "Instance file")->required();
  verify->add_option("--trials", trials, "Monte Carlo trials")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", seed);
  verify->add_option("--mode", mode)->check(CLI::IsMember({"direct", "delta"}));
  verify->add_flag("--strict-partition", strict);
  verify->add_option("--out", out_path);

  // generate
  auto* generate = app.add_subcommand("generate", "Write an instance");
  generate->require_subcommand(1);
  int degree = 5;
  auto* gen_star = generate->add_subcommand("star", "Star graph");
  gen_star->add_option("--degree,-D", degree, "Number of leaves")->check(CLI::PositiveNumber);
  gen_star->add_option("--out", out_path);

  pvc::RandomInstanceConfig rcfg;
  std::string assignment = "random";
  auto* gen_random = generate->add_subcommand("random", "Random instance");
  gen_random->add_option("--vertices,-n", rcfg.num_vertices);
  gen_random->add_option("--edges,-m", rcfg.num_edges);
  gen_random->add_option("--groups,-r", rcfg.num_groups);
  gen_random->add_option("--cost-min", rcfg.cost_min);
  gen_random->add_option("--cost-max", rcfg.cost_max);
  gen_random->add_option("--weight-min", rcfg.weight_min);
  gen_random->add_option("--weight-max", rcfg.weight_max);
  gen_random->add_option("--overlap", rcfg.overlap_probability, "Extra group membership probability");
  gen_random->add_option("--assignment", assignment)
      ->check(CLI::IsMember({"random", "round-robin"}));
  gen_random->add_option("--seed", seed);
  gen_random->add_option("--out", out_path);

  std::string sc_path;
  auto* gen_reduce = generate->add_subcommand("setcover-reduce", "Reduce a set cover file");
  gen_reduce->add_option("input", sc_path, "Set cover file")->required();
  gen_reduce->add_option("--out", out_path);

  int sc_elements = 5;
  int sc_sets = 5;
  pvc::Cost sc_cost_max = 1;
  auto* gen_sc = generate->add_subcommand("setcover", "Random set cover instance");
  gen_sc->add_option("--elements", sc_elements);
  gen_sc->add_option("--sets", sc_sets);
  gen_sc->add_option("--cost-max", sc_cost_max);
  gen_sc->add_option("--seed", seed);
  gen_sc->add_option("--out", out_path);

  // bench
  pvc::BenchConfig bcfg;
  auto* bench = app.add_subcommand("bench", "Batch comparison, CSV output");
  bench->add_option("--trials", bcfg.instances, "Number of instances")
      ->check(CLI::NonNegativeNumber);
  bench->add_option("--seed", bcfg.seed);
  bench->add_option("--min-vertices", bcfg.min_vertices);
  bench->add_option("--max-vertices", bcfg.max_vertices);
  bench->add_option("--max-edges", bcfg.max_edges);
  bench->add_option("--max-groups", bcfg.max_groups);
  bench->add_option("--cost-min", bcfg.cost_min);
  bench->add_option("--cost-max", bcfg.cost_max);
  bench->add_option("--weight-min", bcfg.weight_min);
  bench->add_option("--weight-max", bcfg.weight_max);
  bench->add_option("--overlap", bcfg.overlap_probability);
  bench->add_option("--rounds-constant", bcfg.rounds_constant)->check(CLI::PositiveNumber);
  bench->add_option("--mc-trials", bcfg.coverage_trials, "Single-round trials per instance");
  bench->add_option("--mode", mode)->check(CLI::IsMember({"direct", "delta"}));
  bench->add_flag("--timing", bcfg.with_timing);
  bench->add_option("--out", out_path);

  std::vector<int> degrees{2, 5, 20, 100};
  auto* gap = app.add_subcommand("gap", "Star integrality-gap table");
  gap->add_option("--degrees,-D", degrees, "Star degrees")->delimiter(',')->check(CLI::PositiveNumber);
  gap->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const pvc::SolveMode solve_mode =
      mode == "delta" ? pvc::SolveMode::kDeltaSearch : pvc::SolveMode::kDirect;

  try {
    if (*solve) {
      const pvc::Instance inst = load(input, strict);
      pvc::PvcLpOptions lp_options;
      lp_options.mode = solve_mode;
      if (cut_log) lp_options.cut_log = &std::cerr;
      const auto t0 = std::chrono::steady_clock::now();
      const pvc::FractionalSolution fs = pvc::solve_pvclp(inst, lp_options);
      const double lp_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      pvc::RoundingConfig rc;
      rc.seed = seed;
      rc.rounds_constant = rounds_constant;
      rc.prune = prune;
      pvc::RoundedSolution rounded = pvc::solve_rounded(inst, fs, rc);
      rounded.report.lp_seconds = lp_seconds;
      std::string text = rounded.report.to_text(timing);
      text += "lp_solves " + std::to_string(fs.lp_solves) + "\n";
      text += "cuts " + std::to_string(fs.cuts) + "\n";
      if (fs.delta) text += "delta " + std::to_string(*fs.delta) + "\n";
      emit(text, out_path);
    } else if (*exact) {
      const pvc::Instance inst = load(input, strict);
      const pvc::ExactResult res = pvc::exact_solve(inst, limit);
      emit("optimum " + std::to_string(res.optimum) + "\nchosen" + join(res.chosen) +
               "\nnodes " + std::to_string(res.nodes) + "\n",
           out_path);
    } else if (*greedy) {
      const pvc::Instance inst = load(input, strict);
      const pvc::VertexSelection sel = pvc::greedy_solve(inst);
      emit("cost " + std::to_string(sel.cost) + "\nchosen" + join(sel.chosen) + "\n", out_path);
    } else if (*lp1) {
      const pvc::Instance inst = load(input, strict);
      const pvc::Lp1Solution sol = pvc::solve_lp1(inst);
      std::string text = "value " + fixed(sol.objective) + "\nx";
      for (double v : sol.x) text += ' ' + fixed(v);
      text += "\ny";
      for (double v : sol.y) text += ' ' + fixed(v);
      emit(text + "\n", out_path);
    } else if (*verify) {
      const pvc::Instance inst = load(input, strict);
      pvc::PvcLpOptions lp_options;
      lp_options.mode = solve_mode;
      const pvc::FractionalSolution fs = pvc::solve_pvclp(inst, lp_options);
      const auto est = pvc::estimate_round_coverage(inst, fs.x, trials, pvc::Rng(seed));
      std::string text = "lp_value " + fixed(fs.objective) + "\ntrials " +
                         std::to_string(trials) + "\nmin_beta_sum " +
                         fixed(pvc::min_beta_sum(inst, fs.x)) + "\n";
      text += "group frequency radius target\n";
      for (int i = 0; i < inst.num_groups(); ++i) {
        text += std::to_string(i) + ' ' + fixed(est.frequency[i]) + ' ' + fixed(est.radius[i]) +
                ' ' + std::to_string(inst.group(i).target) + '\n';
      }
      emit(text, out_path);
    } else if (*generate) {
      if (*gen_star) {
        emit(pvc::serialize_instance(pvc::generate_star(degree)), out_path);
      } else if (*gen_random) {
        rcfg.assignment = assignment == "round-robin" ? pvc::GroupAssignment::kRoundRobin
                                                      : pvc::GroupAssignment::kRandom;
        emit(pvc::serialize_instance(pvc::generate_random(rcfg, seed)), out_path);
      } else if (*gen_reduce) {
        const auto sc = pvc::parse_set_cover(read_file(sc_path));
        emit(pvc::serialize_instance(pvc::reduce_set_cover(sc)), out_path);
      } else if (*gen_sc) {
        emit(pvc::serialize_set_cover(
                 pvc::generate_set_cover(sc_elements, sc_sets, sc_cost_max, seed)),
             out_path);
      }
    } else if (*bench) {
      bcfg.mode = solve_mode;
      const auto records = pvc::run_bench(bcfg);
      emit(pvc::bench_csv(records, bcfg.with_timing), out_path);
    } else if (*gap) {
      std::vector<pvc::GapRow> rows;
      for (int d : degrees) rows.push_back(pvc::gap_row(d));
      emit(pvc::gap_table(rows), out_path);
    }
  } catch (const pvc::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const pvc::InvariantError& e) {
    std::cerr << "error: invariant violated: " << e.what() << '\n';
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const pvc::InfeasibleAfterRestartsError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSolver;
  }
  return 0;
}
