#include <gtest/gtest.h>

#include <cmath>

#include "cornersearch/bounds_lab.hpp"
#include "cornersearch/errors.hpp"
#include "oracles.hpp"

namespace cornersearch {
namespace {

TEST(LowerBound, HalfDeltaStopsAfterOneStep) {
  const LowerBoundReport r = lower_bound_experiment(0.5);
  ASSERT_EQ(r.steps.size(), 1u);  // x_2 = 0.5 * 1.5 - 1 < 0
  EXPECT_DOUBLE_EQ(r.steps[0], 0.5);
  EXPECT_TRUE(r.bound_violations.empty());
  EXPECT_LT(r.total_distance, 2.0);
  EXPECT_DOUBLE_EQ(r.distance_bound, 2.0);
}

TEST(LowerBound, DeltaNearOneCollapsesImmediately) {
  const LowerBoundReport r = lower_bound_experiment(0.999);
  ASSERT_EQ(r.steps.size(), 1u);
  EXPECT_NEAR(r.steps[0], 0.001, 1e-15);
}

TEST(LowerBound, HandComputedDeltaTenth) {
  // x_1 = 0.9, x_2 = 0.9 * 1.9 - 1 = 0.71, x_3 = 0.9 * 2.61 - 2 = 0.349,
  // x_4 = 0.9 * 2.959 - 3 < 0.
  const LowerBoundReport r = lower_bound_experiment(0.1);
  ASSERT_EQ(r.steps.size(), 3u);
  EXPECT_NEAR(r.steps[0], 0.9, 1e-15);
  EXPECT_NEAR(r.steps[1], 0.71, 1e-15);
  EXPECT_NEAR(r.steps[2], 0.349, 1e-14);
  EXPECT_NEAR(r.total_distance, 1.959, 1e-14);
  EXPECT_LT(r.total_distance, 10.0);
}

TEST(LowerBound, NoViolationsAndBoundedDistance) {
  for (const double delta : {0.01, 0.05, 0.1, 0.25, 0.5, 0.001, 1e-4}) {
    const LowerBoundReport r = lower_bound_experiment(delta);
    EXPECT_TRUE(r.bound_violations.empty()) << "delta=" << delta;
    EXPECT_FALSE(r.step_cap_hit);
    EXPECT_LE(r.total_distance, (1.0 - delta) / delta) << "delta=" << delta;
    EXPECT_LT(r.total_distance, r.distance_bound);
    for (std::size_t i = 0; i < r.steps.size(); ++i) {
      EXPECT_LE(r.steps[i], std::pow(1.0 - delta, static_cast<double>(i + 1)) + 1e-12);
    }
  }
}

TEST(LowerBound, StepCap) {
  const LowerBoundReport r = lower_bound_experiment(0.01, 2);
  EXPECT_TRUE(r.step_cap_hit);
  EXPECT_EQ(r.steps.size(), 2u);
}

TEST(LowerBound, DeltaOutsideUnitIntervalIsRejected) {
  EXPECT_THROW(lower_bound_experiment(0.0), DomainError);
  EXPECT_THROW(lower_bound_experiment(1.0), DomainError);
  EXPECT_THROW(lower_bound_experiment(-0.2), DomainError);
}

TEST(AsymptoticWitness, EpsilonTenthWindowEight) {
  const AsymptoticReport r = asymptotic_witness(0.1, 8);
  ASSERT_TRUE(r.found);
  EXPECT_TRUE(r.liftoff_ok());
  EXPECT_TRUE(r.reached());
  EXPECT_GE(r.intermediate_steps(), 8u);
  // The lift-off bound checked directly on the geometric route's sequence.
  EXPECT_TRUE(testing::geometric_feasible(2.1, r.d_used));
  for (std::size_t n = 1; n <= 8; ++n) {
    EXPECT_GE(r.sequence.steps[n - 1], 1.0 + (std::pow(2.0, static_cast<double>(n)) - 1.0) * 0.1 - 1e-12);
  }
}

TEST(AsymptoticWitness, EpsilonOneNeedsXThreeAtLeastEight) {
  const AsymptoticReport r = asymptotic_witness(1.0, 3);
  ASSERT_TRUE(r.found);
  EXPECT_TRUE(r.liftoff_ok());
  EXPECT_TRUE(r.reached());
  ASSERT_GE(r.intermediate_steps(), 3u);
  EXPECT_GE(r.sequence.steps[2], 8.0);
}

TEST(AsymptoticWitness, FirstStepLiftsOffByConstruction) {
  const AsymptoticReport r = asymptotic_witness(0.01, 1);
  ASSERT_TRUE(r.found);
  EXPECT_NEAR(r.sequence.steps[0], 1.01, 1e-12);
  EXPECT_TRUE(r.liftoff_ok());
}

TEST(AsymptoticWitness, DefaultWindowSatisfiesAllThreeChecks) {
  const AsymptoticReport r = asymptotic_witness(0.1);
  ASSERT_TRUE(r.found);
  EXPECT_EQ(r.window, 12u);
  EXPECT_TRUE(r.liftoff_ok());
  EXPECT_TRUE(r.average_ok());
  EXPECT_TRUE(r.glide_ok());
}

TEST(AsymptoticWitness, ChecksFollowTheStoredSequence) {
  AsymptoticReport r = asymptotic_witness(0.1, 8);
  ASSERT_TRUE(r.liftoff_ok());
  ASSERT_TRUE(r.glide_ok());
  r.sequence.steps[2] = 0.5;
  EXPECT_FALSE(r.liftoff_ok());
  r.sequence.steps[7] = 1.0;  // x_N
  EXPECT_FALSE(r.glide_ok());
}

TEST(AsymptoticWitness, ReportsMissingWitnessBelowCap) {
  const AsymptoticReport r = asymptotic_witness(0.001, 12, 100.0);
  EXPECT_FALSE(r.found);
  EXPECT_LE(r.d_used, 100.0);
}

TEST(AsymptoticWitness, Errors) {
  EXPECT_THROW(asymptotic_witness(0.0), DomainError);
  EXPECT_THROW(asymptotic_witness(0.1, 0), DomainError);
}

TEST(ArcChordGap, EmptyArc) {
  for (const double d : {0.1, 1.0, 1e6}) EXPECT_EQ(arc_chord_gap(d, 0.0), 0.0);
}

TEST(ArcChordGap, HalfCircleOfUnitDiameter) {
  // Arc pi/2 on a circle of diameter 1 is the semicircle; its chord is the diameter.
  EXPECT_NEAR(arc_chord_gap(1.0, testing::kPi / 2.0), testing::kPi / 2.0 - 1.0, 1e-15);
}

TEST(ArcChordGap, MonotoneInArcLength) {
  for (const double d : {1.0, 10.0, 250.0}) {
    double previous = -1.0;
    for (int k = 0; k <= 400; ++k) {
      const double arc = testing::kPi * d / 2.0 * k / 400.0;
      const double gap = arc_chord_gap(d, arc);
      EXPECT_GE(gap, previous);
      previous = gap;
    }
  }
}

TEST(ArcChordGap, VanishesForGrowingDiameter) {
  double previous = arc_chord_gap(10.0, 10.0);
  for (double d = 20.0; d < 1e6; d *= 2.0) {
    const double gap = arc_chord_gap(d, 10.0);
    EXPECT_LT(gap, previous);
    previous = gap;
  }
  EXPECT_LT(previous, 1e-6);
}

TEST(ArcChordGap, DiameterForGapBound) {
  // Series: a - d sin(a/d) ~ a^3 / (6 d^2), so gap 1e-4 at a = 10 needs d ~ 1291.
  const double d0 = diameter_for_arc_gap(10.0, 0.01 * 0.01);
  EXPECT_NEAR(d0, std::sqrt(1000.0 / 6e-4), 0.01 * d0);
  EXPECT_LE(arc_chord_gap(d0, 10.0), 1e-4);
  EXPECT_GT(arc_chord_gap(d0 * (1 - 1e-6), 10.0), 1e-4);
}

TEST(ArcChordGap, Errors) {
  EXPECT_THROW(arc_chord_gap(1.0, 2.0), DomainError);
  EXPECT_THROW(arc_chord_gap(1.0, -0.1), DomainError);
  EXPECT_THROW(arc_chord_gap(0.0, 0.0), DomainError);
}

TEST(AsymptoticProperty, CircleRatioApproachesTwoFromAbove) {
  double previous = 10.0;
  for (double d = 10.0; d <= 10240.0; d *= 2.0) {
    const double excess = solve_optimal_c(d).c_opt - 2.0;
    EXPECT_GT(excess, 0.0) << "d=" << d;
    EXPECT_LT(excess, previous) << "d=" << d;
    previous = excess;
  }
}

TEST(AsymptoticProperty, StepLengthsGrowWithDiameterObservation) {
  // Observation only: larger rooms give longer steps at fixed c.
  std::size_t exceptions = 0;
  for (double d = 50.0; d <= 3200.0; d *= 2.0) {
    const StepSequence small = simulate_sequence(2.1, d);
    const StepSequence large = simulate_sequence(2.1, 2.0 * d);
    const std::size_t shared = std::min(small.steps.size(), large.steps.size()) - 1;
    for (std::size_t n = 0; n < shared; ++n) exceptions += large.steps[n] + 1e-12 < small.steps[n] ? 1 : 0;
  }
  RecordProperty("step_monotonicity_exceptions", static_cast<int>(exceptions));
}

}  // namespace
}  // namespace cornersearch
