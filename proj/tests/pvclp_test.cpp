#include <sstream>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "pvc/constants.hpp"
#include "pvc/exact.hpp"
#include "pvc/generators.hpp"
#include "pvc/pvclp.hpp"
#include "pvc/rng.hpp"

namespace pvc {
namespace {

Instance single_edge(Cost a, Cost b) { return Instance({a, b}, {{0, 1, 1}}, {{{0}, 1}}); }

// Two groups sharing vertex 1: path 0-1-2 plus 2-3, weights 2,3,1.
Instance small_weighted() {
  return Instance({1, 2, 3, 4}, {{0, 1, 2}, {1, 2, 3}, {2, 3, 1}},
                  {{{0, 1}, 4}, {{2}, 1}});
}

std::vector<bool> mask_of(int n, std::initializer_list<int> members) {
  std::vector<bool> m(n, false);
  for (int v : members) m[v] = true;
  return m;
}

TEST(ResidualTest, Examples) {
  const Instance inst = small_weighted();
  EXPECT_EQ(residual(inst, 0, VertexSet{}), 4);
  EXPECT_EQ(residual(inst, 0, VertexSet{0}), 2);
  EXPECT_EQ(residual(inst, 0, VertexSet{1}), 0);
  EXPECT_EQ(residual(inst, 0, VertexSet{2}), 1);
  EXPECT_EQ(residual(inst, 1, VertexSet{3}), 0);
}

TEST(WdegTest, Examples) {
  const Instance inst = small_weighted();
  EXPECT_EQ(wdeg(inst, 0, 1, VertexSet{}), 5);
  EXPECT_EQ(wdeg(inst, 0, 1, VertexSet{0}), 3);
  EXPECT_EQ(wdeg(inst, 0, 3, VertexSet{}), 0);
  EXPECT_THROW(wdeg(inst, 0, 0, VertexSet{0}), std::invalid_argument);
}

TEST(KcConstraintTest, TruncatesCoefficients) {
  const Instance inst = small_weighted();
  const auto row = build_kc_constraint(inst, 0, VertexSet{0});
  ASSERT_TRUE(row.has_value());
  EXPECT_EQ(row->rhs, 2);
  // vertex 1: wdeg 3 -> 2; vertex 2: wdeg 3 -> 2.
  const std::vector<std::pair<VertexId, Weight>> expected{{1, 2}, {2, 2}};
  EXPECT_EQ(row->coefficients, expected);
  EXPECT_FALSE(build_kc_constraint(inst, 0, VertexSet{1}).has_value());
}

TEST(KcConstraintTest, MatchesDefinitionOnAllSubsets) {
  RandomInstanceConfig cfg;
  cfg.num_vertices = 7;
  cfg.num_edges = 12;
  cfg.num_groups = 3;
  cfg.weight_max = 4;
  cfg.overlap_probability = 0.2;
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Instance inst = generate_random(cfg, seed);
    const int n = inst.num_vertices();
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      std::vector<bool> in_a(n);
      for (int v = 0; v < n; ++v) in_a[v] = mask >> v & 1U;
      for (int i = 0; i < inst.num_groups(); ++i) {
        const auto ref = oracle::kc_by_definition(inst, i, in_a);
        const auto row = build_kc_constraint(inst, i, in_a);
        ASSERT_EQ(row.has_value(), ref.rhs > 0);
        if (!row) continue;
        EXPECT_EQ(row->rhs, ref.rhs);
        std::vector<Weight> dense(n, 0);
        for (auto [v, c] : row->coefficients) {
          EXPECT_FALSE(in_a[v]);
          EXPECT_GT(c, 0);
          dense[v] = c;
        }
        EXPECT_EQ(dense, ref.coefficient);
      }
    }
  }
}

TEST(SeparateTest, StarPoints) {
  const Instance star = generate_star(5);
  std::vector<double> x(6, 0.0);
  x[0] = 0.2;
  EXPECT_EQ(separate(star, x).status, SeparationStatus::kClean);
  x[0] = 0.1;
  const SeparationResult res = separate(star, x);
  ASSERT_EQ(res.status, SeparationStatus::kViolated);
  ASSERT_TRUE(res.cut.has_value());
  EXPECT_EQ(res.cut->group, 0);
  EXPECT_TRUE(res.cut->suppressed.empty());
  EXPECT_NEAR(res.cut_lhs, 0.1, 1e-12);
}

TEST(SeparateTest, AllOnesCleanAndZeroViolated) {
  const Instance inst = small_weighted();
  EXPECT_EQ(separate(inst, std::vector<double>(4, 1.0)).status, SeparationStatus::kClean);
  const SeparationResult res = separate(inst, std::vector<double>(4, 0.0));
  EXPECT_EQ(res.status, SeparationStatus::kViolated);
  EXPECT_EQ(res.violated.size(), 2U);
}

TEST(SeparateTest, CostCap) {
  const Instance star = generate_star(5);
  std::vector<double> x(6, 0.0);
  x[0] = 1.0;
  EXPECT_EQ(separate(star, x, 0.5).status, SeparationStatus::kCostCapViolated);
  EXPECT_EQ(separate(star, x, 1.0).status, SeparationStatus::kClean);
}

TEST(ThresholdSetTest, UsesTolerance) {
  const std::vector<double> x{kThreshold, kThreshold - 5e-8, kThreshold - 1e-6, 1.0, 0.0};
  const std::vector<bool> expected{true, true, false, true, false};
  EXPECT_EQ(threshold_set(x, kFeasTol), expected);
}

TEST(SolvePvcLpTest, StarIsOne) {
  for (int d : {2, 5, 20, 100}) {
    const FractionalSolution sol = solve_pvclp(generate_star(d));
    EXPECT_NEAR(sol.objective, 1.0, 1e-6) << "D=" << d;
  }
}

TEST(SolvePvcLpTest, StarAgreesWithAllSubsetsLp) {
  const Instance star = generate_star(5);
  const LpOutcome full = lp_solve(oracle::all_subsets_kc_lp(star));
  ASSERT_EQ(full.status, LpStatus::kOptimal);
  PvcLpOptions options;
  options.include_natural_rows = false;
  EXPECT_NEAR(solve_pvclp(star, options).objective, full.value, 1e-6);
}

TEST(SolvePvcLpTest, SingleEdge) {
  EXPECT_NEAR(solve_pvclp(single_edge(3, 5)).objective, 3.0, 1e-6);
  PvcLpOptions delta;
  delta.mode = SolveMode::kDeltaSearch;
  const FractionalSolution sol = solve_pvclp(single_edge(3, 5), delta);
  EXPECT_NEAR(sol.objective, 3.0, 1e-6);
  ASSERT_TRUE(sol.delta.has_value());
  EXPECT_EQ(*sol.delta, 3);
}

TEST(SolvePvcLpTest, ZeroTargetsGiveZero) {
  const Instance inst({4, 7}, {{0, 1, 1}}, {{{0}, 0}});
  const FractionalSolution sol = solve_pvclp(inst);
  EXPECT_NEAR(sol.objective, 0.0, 1e-12);
  EXPECT_EQ(sol.cuts, 0);
}

TEST(SolvePvcLpTest, DirectAndDeltaAgreeAndBoundOptimum) {
  RandomInstanceConfig cfg;
  cfg.num_vertices = 9;
  cfg.num_edges = 14;
  cfg.num_groups = 3;
  for (std::uint64_t seed = 100; seed < 115; ++seed) {
    const Instance inst = generate_random(cfg, seed);
    const double direct = solve_pvclp(inst).objective;
    PvcLpOptions options;
    options.mode = SolveMode::kDeltaSearch;
    const FractionalSolution delta = solve_pvclp(inst, options);
    const Cost opt = exact_solve(inst).optimum;
    EXPECT_LE(direct, static_cast<double>(opt) + kOptTol);
    EXPECT_LE(delta.objective, static_cast<double>(opt) + kOptTol);
    // Delta mode stops at the smallest integer cap, so it may sit up to 1 above.
    EXPECT_NEAR(delta.objective, direct, 1.0 + 1e-6) << "seed " << seed;
    ASSERT_TRUE(delta.delta.has_value());
    EXPECT_GE(static_cast<double>(*delta.delta), direct - kOptTol);
  }
}

TEST(SolvePvcLpTest, CutLogHasOneLinePerCut) {
  std::ostringstream log;
  PvcLpOptions options;
  options.cut_log = &log;
  const FractionalSolution sol = solve_pvclp(small_weighted(), options);
  int lines = 0;
  for (char c : log.str()) lines += c == '\n';
  EXPECT_EQ(lines, sol.cuts);
}

TEST(SolveLp1Test, StarIsOneOverD) {
  for (int d : {5, 100}) EXPECT_NEAR(solve_lp1(generate_star(d)).objective, 1.0 / d, 1e-6);
}

TEST(SolveLp1Test, SingleEdge) { EXPECT_NEAR(solve_lp1(single_edge(3, 5)).objective, 3.0, 1e-6); }

class PvcLpPropertyTest : public ::testing::TestWithParam<std::uint64_t> {
 protected:
  Instance make() const {
    RandomInstanceConfig cfg;
    Rng rng(GetParam());
    cfg.num_vertices = static_cast<int>(rng.uniform_int(4, 10));
    const int max_edges = cfg.num_vertices * (cfg.num_vertices - 1) / 2;
    cfg.num_groups = static_cast<int>(rng.uniform_int(1, 4));
    cfg.num_edges = static_cast<int>(rng.uniform_int(cfg.num_groups, std::min(16, max_edges)));
    cfg.weight_max = rng.uniform_int(1, 3);
    cfg.overlap_probability = rng.bernoulli(0.5) ? 0.25 : 0.0;
    return generate_random(cfg, rng.next());
  }
};

TEST_P(PvcLpPropertyTest, Sandwich) {
  const Instance inst = make();
  const double lp1 = solve_lp1(inst).objective;
  const double kc = solve_pvclp(inst).objective;
  const Cost opt = exact_solve(inst).optimum;
  EXPECT_LE(lp1, kc + kOptTol);
  EXPECT_LE(kc, static_cast<double>(opt) + kOptTol);
}

TEST_P(PvcLpPropertyTest, CertificateRowsHold) {
  const Instance inst = make();
  const FractionalSolution sol = solve_pvclp(inst);
  for (const auto& row : sol.certificate) {
    EXPECT_GE(row.lhs(sol.x), static_cast<double>(row.rhs) - kFeasTol);
  }
  EXPECT_EQ(separate(inst, sol.x).status, SeparationStatus::kClean);
  for (double v : sol.x) {
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
  }
}

TEST_P(PvcLpPropertyTest, TraceIsNonDecreasing) {
  const FractionalSolution sol = solve_pvclp(make());
  for (std::size_t k = 1; k < sol.objective_trace.size(); ++k) {
    EXPECT_GE(sol.objective_trace[k], sol.objective_trace[k - 1] - 1e-9);
  }
}

TEST_P(PvcLpPropertyTest, CostScalingIsEquivariant) {
  const Instance inst = make();
  std::vector<Cost> scaled = inst.costs();
  for (auto& c : scaled) c *= 3;
  const Instance big(scaled, inst.edges(), inst.groups());
  EXPECT_NEAR(solve_pvclp(big).objective, 3.0 * solve_pvclp(inst).objective, 1e-5);
}

TEST_P(PvcLpPropertyTest, XOnlyRelaxationBelowOptimum) {
  const Instance inst = make();
  PvcLpOptions options;
  options.include_natural_rows = false;
  const FractionalSolution sol = solve_pvclp(inst, options);
  EXPECT_TRUE(sol.y.empty());
  EXPECT_LE(sol.objective, static_cast<double>(exact_solve(inst).optimum) + kOptTol);
  EXPECT_LE(sol.objective, solve_pvclp(inst).objective + kOptTol);
}

INSTANTIATE_TEST_SUITE_P(Seeds, PvcLpPropertyTest, ::testing::Range<std::uint64_t>(0, 25));

TEST(TruncationTest, StarGapPointIsCut) {
  // x_center = 1/D satisfies the natural relaxation but not the A = {} row.
  const int d = 20;
  const Instance star = generate_star(d);
  std::vector<double> x(d + 1, 0.0);
  x[0] = 1.0 / d;
  const SeparationResult res = separate(star, x);
  ASSERT_EQ(res.status, SeparationStatus::kViolated);
  EXPECT_LT(res.cut_lhs, 1.0);
  EXPECT_GT(solve_pvclp(star).objective, solve_lp1(star).objective + 0.5);
}

}  // namespace
}  // namespace pvc
