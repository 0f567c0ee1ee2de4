#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "cornersearch/circle_strategy.hpp"
#include "cornersearch/errors.hpp"
#include "cornersearch/global_optimizer.hpp"

namespace cornersearch {
namespace {

TEST(GlobalOptimize, OneFreePointAtUnitDistance) {
  const OptimizationResult r = global_optimize(1.0, 1, 16);
  EXPECT_NEAR(r.c_achieved, 1.808201, 1e-4);
  EXPECT_TRUE(r.converged);
  ASSERT_EQ(r.points.size(), 1u);
  // Regression fixture, cross-checked with an SLSQP epigraph solve.
  EXPECT_NEAR(r.points[0].theta, 0.8738389, 1e-5);
  EXPECT_NEAR(r.points[0].r, 0.3865265, 1e-5);
  EXPECT_NEAR(r.c_achieved, 1.80820143, 1e-7);
}

TEST(GlobalOptimize, OneFreePointEqualizesBothRatios) {
  const OptimizationResult r = global_optimize(1.0, 1, 16);
  const RatioCertificate cert = evaluate_trajectory(r.trajectory());
  ASSERT_EQ(cert.per_position.size(), 2u);
  for (const PositionRatio& p : cert.per_position) EXPECT_NEAR(p.ratio, r.c_achieved, 1e-6);
}

TEST(GlobalOptimize, NoScansIsTheDirectWalk) {
  const OptimizationResult r = global_optimize(0.5, 0, 1);
  EXPECT_DOUBLE_EQ(r.c_achieved, 1.5);
  EXPECT_TRUE(r.points.empty());
  EXPECT_TRUE(r.converged);
  EXPECT_DOUBLE_EQ(evaluate_trajectory(r.trajectory()).worst_ratio, 1.5);
}

TEST(GlobalOptimize, ThreeFreePointsNearThePeak) {
  // Free optimum with three scans at d = 4.4; every ratio equalized.
  const OptimizationResult r = global_optimize(4.4, 3, 16);
  EXPECT_NEAR(r.c_achieved, 2.132147, 1e-5);
  EXPECT_LT(r.c_achieved, solve_optimal_c(4.4).c_opt);
}

TEST(GlobalOptimize, ResultInvariants) {
  for (const auto& [d, n] : {std::pair{0.8, std::size_t{1}}, {2.0, 2}, {3.0, 2}, {4.4, 3}}) {
    const OptimizationResult r = global_optimize(d, n, 4);
    EXPECT_EQ(r.points.size(), n);
    EXPECT_NO_THROW(r.trajectory().validate());
    EXPECT_NEAR(evaluate_trajectory(r.trajectory()).worst_ratio, r.c_achieved, 1e-10);
    EXPECT_GT(r.iterations, 0u);
  }
}

TEST(GlobalOptimize, NeverWorseThanTheCircleStrategy) {
  for (const double d : {0.7, 1.0, 1.5, 2.5, 3.5, 4.4, 6.0}) {
    const OptimalRatio circle = solve_optimal_c(d);
    const OptimizationResult r = global_optimize(d, scan_count(circle.sequence), 2);
    EXPECT_LE(r.c_achieved, circle.c_opt + 1e-9) << "d=" << d;
  }
}

TEST(GlobalOptimize, RestartOrderDoesNotMatter) {
  const std::vector<std::uint64_t> seeds{3, 1, 4, 1, 5, 9, 2, 6};
  std::vector<std::uint64_t> reversed(seeds.rbegin(), seeds.rend());
  const OptimizationResult a = global_optimize(2.0, 2, seeds);
  const OptimizationResult b = global_optimize(2.0, 2, reversed);
  EXPECT_NEAR(a.c_achieved, b.c_achieved, 1e-8);
}

TEST(GlobalOptimize, SameSeedsSameAnswer) {
  const OptimizationResult a = global_optimize(1.7, 2, 6, 42);
  const OptimizationResult b = global_optimize(1.7, 2, 6, 42);
  EXPECT_EQ(a.c_achieved, b.c_achieved);
  EXPECT_EQ(a.iterations, b.iterations);
}

TEST(GlobalOptimize, Errors) {
  EXPECT_THROW(global_optimize(0.0, 1, 1), DomainError);
  EXPECT_THROW(global_optimize(1.0, 1, 0), DomainError);
}

TEST(GapToCircle, ZeroScanRegimeHasNoGap) { EXPECT_NEAR(gap_to_circle(0.5, 2), 0.0, 1e-9); }

TEST(GapToCircle, AtThePeak) {
  const double gap = gap_to_circle(4.400876, 8);
  EXPECT_GE(gap, 0.0);
  EXPECT_LE(gap, 0.035);
}

TEST(GapToCircle, JustBelowThePeak) {
  const double gap = gap_to_circle(4.4, 8);
  EXPECT_GE(gap, 0.015);
  EXPECT_LE(gap, 0.035);
}

TEST(GapToCircle, LargeDistance) {
  const double gap = gap_to_circle(40.0, 1);
  EXPECT_GE(gap, -1e-9);
  EXPECT_LT(gap, 0.01);
}

}  // namespace
}  // namespace cornersearch
