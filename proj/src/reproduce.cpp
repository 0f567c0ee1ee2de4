#include "cornersearch/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "cornersearch/bounds_lab.hpp"
#include "cornersearch/circle_strategy.hpp"
#include "cornersearch/global_optimizer.hpp"
#include "cornersearch/io.hpp"

namespace cornersearch {

namespace {

using io::format_csv_number;

bool within(double value, double target, double tol) { return std::abs(value - target) <= tol; }

std::string plus_minus(double target, double tol) {
  return format_csv_number(target) + " +- " + format_csv_number(tol);
}

void threshold_checks(std::vector<CheckResult>& out) {
  const std::vector<ThresholdRow> rows = threshold_table(5);
  for (const ThresholdReference& ref : kThresholdReference) {
    const ThresholdRow& row = rows[ref.n_scans];
    const bool pass = within(row.d_max, ref.d_max, kThresholdTolerance) &&
                      within(row.c_at_d_max, ref.c_at_d_max, kThresholdTolerance);
    out.push_back({"thresholds." + std::to_string(ref.n_scans),
                   "largest d with " + std::to_string(ref.n_scans) + " scans, and c there",
                   format_csv_number(row.d_max) + " / " + format_csv_number(row.c_at_d_max),
                   format_csv_number(ref.d_max) + " / " + format_csv_number(ref.c_at_d_max) + " +- 1e-05", pass});
  }
}

void d40_checks(std::vector<CheckResult>& out) {
  const double c = solve_optimal_c(40.0).c_opt;
  out.push_back({"d40.optimum", "optimal circle ratio at d = 40", format_csv_number(c), "[2.001515, 2.001535]",
                 c >= 2.001515 && c <= 2.001535});
  const StepSequence above = simulate_sequence(2.0016, 40.0);
  const StepSequence below = simulate_sequence(2.0015, 40.0);
  out.push_back({"d40.bracket", "c = 2.0016 reaches the corner, c = 2.0015 collapses",
                 std::string(to_string(above.status)) + " / " + std::string(to_string(below.status)),
                 "ReachedCorner / Collapsed",
                 above.status == SequenceStatus::ReachedCorner && below.status == SequenceStatus::Collapsed});
}

void peak_check(std::vector<CheckResult>& out) {
  const std::vector<CurvePoint> curve = ratio_curve(4.0, 5.0, 10001);
  const auto peak = std::max_element(curve.begin(), curve.end(),
                                     [](const CurvePoint& a, const CurvePoint& b) { return a.c_opt < b.c_opt; });
  out.push_back({"peak", "maximum of c(d) over [4, 5] at 1e-4 spacing",
                 "d = " + format_csv_number(peak->d) + ", c = " + format_csv_number(peak->c_opt),
                 "d = " + plus_minus(kPeakDistance, 5e-4) + ", c = " + plus_minus(kPeakRatio, 1e-4),
                 within(peak->d, kPeakDistance, 5e-4) && within(peak->c_opt, kPeakRatio, 1e-4)});
}

void free_optimum_check(std::vector<CheckResult>& out) {
  const OptimizationResult best = global_optimize(1.0, 1, 16);
  out.push_back({"free.d1", "free placement of one scan point at d = 1", format_csv_number(best.c_achieved),
                 plus_minus(kFreeOptimumAt1, 1e-4), within(best.c_achieved, kFreeOptimumAt1, 1e-4)});
}

void gap_check(std::vector<CheckResult>& out) {
  const double gap = gap_to_circle(4.4, 16);
  out.push_back({"gap.d4.4", "circle ratio over free optimum minus one at d = 4.4", format_csv_number(gap),
                 "[0.015, 0.035]", gap >= 0.015 && gap <= 0.035});
}

void lower_bound_checks(std::vector<CheckResult>& out) {
  for (const double delta : {0.01, 0.05, 0.1, 0.25, 0.5}) {
    const LowerBoundReport report = lower_bound_experiment(delta);
    out.push_back({"lowerbound." + format_csv_number(delta), "pessimistic recursion stays under (1 - delta)^i",
                   std::to_string(report.bound_violations.size()) + " violations, total " +
                       format_csv_number(report.total_distance),
                   "0 violations, total < " + format_csv_number(report.distance_bound),
                   report.bound_violations.empty() && report.total_distance < report.distance_bound &&
                       !report.step_cap_hit});
  }
}

void trend_check(std::vector<CheckResult>& out) {
  std::string measured;
  bool decreasing = true;
  bool above_two = true;
  double previous = INFINITY;
  double last = 0.0;
  for (const double d : {10.0, 40.0, 160.0, 640.0, 2560.0}) {
    last = solve_optimal_c(d).c_opt;
    decreasing = decreasing && last < previous;
    above_two = above_two && last > 2.0;
    previous = last;
    if (!measured.empty()) measured += ' ';
    measured += format_csv_number(last);
  }
  out.push_back({"trend", "c(d) for d = 10, 40, 160, 640, 2560", measured,
                 "strictly decreasing, > 2, c(2560) < 2.001 and = " + plus_minus(kOptimumAt2560, 1e-9),
                 decreasing && above_two && last < 2.001 && within(last, kOptimumAt2560, 1e-9)});
}

void oracle_check(std::vector<CheckResult>& out) {
  std::mt19937_64 rng(20040601);
  std::uniform_real_distribution<double> log_d(std::log(0.2), std::log(500.0));
  std::uniform_real_distribution<double> slack(1e-6, 0.3);
  double worst_intermediate = 0.0;
  double worst_excess = -INFINITY;
  std::size_t unreached = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const double d = std::exp(log_d(rng));
    const double c = solve_optimal_c(d).c_opt + slack(rng);
    const StepSequence seq = simulate_sequence(c, d);
    if (!seq.reached_corner()) {
      ++unreached;
      continue;
    }
    const RatioCertificate cert = evaluate_trajectory(to_trajectory(seq));
    for (std::size_t i = 0; i + 1 < cert.per_position.size(); ++i) {
      worst_intermediate = std::max(worst_intermediate, std::abs(cert.per_position[i].ratio - c));
    }
    worst_excess = std::max(worst_excess, cert.worst_ratio - c);
  }
  char measured[160];
  std::snprintf(measured, sizeof measured, "max |ratio - c| = %.3g, max worst - c = %.3g, unreached = %zu",
                worst_intermediate, worst_excess, unreached);
  out.push_back({"oracle", "100 random feasible (c, d): oracle ratios equal c", measured, "<= 1e-09, <= 1e-09, 0",
                 unreached == 0 && worst_intermediate <= 1e-9 && worst_excess <= 1e-9});
}

void unit_step_check(std::vector<CheckResult>& out) {
  const double d = 1e4;
  const double step_angle = std::asin(1.0 / d);
  Trajectory traj{SearchInstance(d), {}, true};
  for (double phi = step_angle; phi < kHalfPi; phi += step_angle) traj.points.push_back({phi, d * std::cos(phi)});
  traj.points.push_back({kHalfPi, 0.0});
  const double worst = evaluate_trajectory(traj).worst_ratio;
  const double rel = std::abs(worst - std::numbers::pi) / std::numbers::pi;
  out.push_back({"unitstep", "unit chords on the semicircle at d = 1e4", format_csv_number(worst),
                 "pi within 2%", rel <= 0.02});
}

}  // namespace

std::vector<CheckResult> run_reproduction_suite() {
  std::vector<CheckResult> checks;
  threshold_checks(checks);
  d40_checks(checks);
  peak_check(checks);
  free_optimum_check(checks);
  gap_check(checks);
  lower_bound_checks(checks);
  trend_check(checks);
  oracle_check(checks);
  unit_step_check(checks);
  return checks;
}

bool all_passed(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::string render_reproduction_report(const std::vector<CheckResult>& checks) {
  std::string out;
  std::size_t passed = 0;
  for (const CheckResult& c : checks) {
    passed += c.pass ? 1 : 0;
    out += std::string(c.pass ? "PASS" : "FAIL") + "  " + c.id + "  " + c.description + "\n      measured: " +
           c.measured + "\n      expected: " + c.expected + '\n';
  }
  out += std::to_string(passed) + "/" + std::to_string(checks.size()) + " checks passed\n";
  return out;
}

}  // namespace cornersearch
