// Acceptance suite: one PASS/FAIL line per criterion, with wall time checked
// against each criterion's budget. Exit status is nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cornersearch/bounds_lab.hpp"
#include "cornersearch/circle_strategy.hpp"
#include "cornersearch/cli.hpp"
#include "cornersearch/geometry.hpp"
#include "cornersearch/global_optimizer.hpp"

namespace {

using namespace cornersearch;

struct Verdict {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Verdict()> check;
};

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buffer[256];
  std::snprintf(buffer, sizeof buffer, format, a, b, c);
  return buffer;
}

Verdict threshold_rows() {
  const double expected[6][2] = {{0.618034, 1.618034}, {1.530414, 2.040287}, {2.799395, 2.155363},
                                 {4.400876, 2.168544}, {6.316892, 2.147994}, {8.514200, 2.118498}};
  std::ostringstream out;
  std::ostringstream err;
  const int status = cli::main_entry({"thresholds", "--max-scans", "5"}, out, err);
  if (status != 0) return {false, "thresholds exited with " + std::to_string(status) + ": " + err.str()};

  std::istringstream csv(out.str());
  std::string line;
  std::getline(csv, line);
  if (line != "n_scans,d_max,c_at_d_max") return {false, "unexpected header " + line};
  double worst = 0.0;
  int rows = 0;
  while (std::getline(csv, line)) {
    int n = -1;
    double d_max = 0.0;
    double c = 0.0;
    if (std::sscanf(line.c_str(), "%d,%lf,%lf", &n, &d_max, &c) != 3 || n != rows) return {false, "bad row " + line};
    worst = std::max({worst, std::abs(d_max - expected[n][0]), std::abs(c - expected[n][1])});
    ++rows;
  }
  return {rows == 6 && worst <= 1e-5, std::to_string(rows) + " rows, max deviation " + fmt("%.2e", worst)};
}

Verdict optimum_at_40() {
  const double c = solve_optimal_c(40.0).c_opt;
  const bool above = simulate_sequence(2.0016, 40.0).status == SequenceStatus::ReachedCorner;
  const bool below = simulate_sequence(2.0015, 40.0).status == SequenceStatus::Collapsed;
  return {c >= 2.001515 && c <= 2.001535 && above && below,
          fmt("c_opt = %.9f, 2.0016 feasible = %.0f, 2.0015 collapses = %.0f", c, above, below)};
}

Verdict peak() {
  const std::vector<CurvePoint> curve = ratio_curve(4.0, 5.0, 10001);
  const auto top = std::max_element(curve.begin(), curve.end(),
                                    [](const CurvePoint& a, const CurvePoint& b) { return a.c_opt < b.c_opt; });
  return {std::abs(top->d - 4.40088) <= 5e-4 && std::abs(top->c_opt - 2.168544) <= 1e-4,
          fmt("max at d = %.4f, c = %.6f", top->d, top->c_opt)};
}

Verdict free_optimum_at_1() {
  const OptimizationResult r = global_optimize(1.0, 1, 16);
  return {std::abs(r.c_achieved - 1.808201) <= 1e-4, fmt("c_achieved = %.6f", r.c_achieved)};
}

Verdict gap_near_peak() {
  const double gap = gap_to_circle(4.4, 16);
  return {gap >= 0.015 && gap <= 0.035, fmt("gap at d = 4.4: %.5f", gap)};
}

Verdict lower_bound() {
  std::string detail;
  bool pass = true;
  for (const double delta : {0.01, 0.05, 0.1, 0.25, 0.5}) {
    const LowerBoundReport r = lower_bound_experiment(delta);
    pass = pass && r.bound_violations.empty() && r.total_distance < 1.0 / delta && !r.step_cap_hit;
    detail += fmt("delta %.2f: %.0f violations, total %.4f; ", delta,
                  static_cast<double>(r.bound_violations.size()), r.total_distance);
  }
  return {pass, detail};
}

Verdict asymptotic_trend() {
  // c(2560) frozen from the solver at tol 1e-9.
  constexpr double kFrozen2560 = 2.0000003056;
  double previous = INFINITY;
  bool pass = true;
  std::string detail;
  for (const double d : {10.0, 40.0, 160.0, 640.0, 2560.0}) {
    const double c = solve_optimal_c(d).c_opt;
    pass = pass && c < previous && c > 2.0;
    previous = c;
    detail += fmt("%.10g ", c);
  }
  pass = pass && previous < 2.001 && std::abs(previous - kFrozen2560) <= 1e-9;
  return {pass, detail};
}

Verdict oracle_equivalence() {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> log_d(std::log(0.1), std::log(1000.0));
  std::uniform_real_distribution<double> slack(1e-8, 0.5);
  double max_dev = 0.0;
  double max_excess = -INFINITY;
  int pairs = 0;
  while (pairs < 100) {
    const double d = std::exp(log_d(rng));
    const double c = solve_optimal_c(d).c_opt + slack(rng);
    const StepSequence seq = simulate_sequence(c, d);
    if (!seq.reached_corner()) return {false, fmt("(c, d) = (%.9g, %.9g) did not reach the corner", c, d)};
    const RatioCertificate cert = evaluate_trajectory(to_trajectory(seq));
    for (std::size_t i = 0; i + 1 < cert.per_position.size(); ++i) {
      max_dev = std::max(max_dev, std::abs(cert.per_position[i].ratio - c));
    }
    max_excess = std::max(max_excess, cert.worst_ratio - c);
    ++pairs;
  }
  return {max_dev <= 1e-9 && max_excess <= 1e-9,
          fmt("100 pairs: max |ratio - c| = %.2e, max (worst - c) = %.2e", max_dev, max_excess)};
}

Verdict unit_chords() {
  const double d = 1e4;
  const double step = std::asin(1.0 / d);
  Trajectory traj{SearchInstance(d), {}, true};
  for (double phi = step; phi < kHalfPi; phi += step) traj.points.push_back({phi, d * std::cos(phi)});
  traj.points.push_back({kHalfPi, 0.0});
  const double worst = evaluate_trajectory(traj).worst_ratio;
  const double rel = std::abs(worst - std::numbers::pi) / std::numbers::pi;
  return {rel <= 0.02, fmt("worst_ratio = %.6f, %.3f%% from pi", worst, 100.0 * rel)};
}

Verdict determinism() {
  std::ostringstream first;
  std::ostringstream second;
  std::ostringstream err;
  const int s1 = cli::main_entry({"reproduce"}, first, err);
  const int s2 = cli::main_entry({"reproduce"}, second, err);
  const bool same = first.str() == second.str() && !first.str().empty();
  return {same && s1 == 0 && s2 == 0,
          std::string("reports ") + (same ? "byte-identical" : "differ") + ", exit " + std::to_string(s1) + "/" +
              std::to_string(s2)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "scan-count thresholds via CLI", 10.0, threshold_rows},
      {2, "d = 40 optimum and bracket", 1.0, optimum_at_40},
      {3, "peak of c(d) on [4, 5]", 30.0, peak},
      {4, "free optimum at d = 1", 10.0, free_optimum_at_1},
      {5, "circle vs free gap at d = 4.4", 60.0, gap_near_peak},
      {6, "lower-bound recursion", 1.0, lower_bound},
      {7, "asymptotic trend toward 2", 10.0, asymptotic_trend},
      {8, "oracle equivalence", 10.0, oracle_equivalence},
      {9, "unit-chord baseline near pi", 1.0, unit_chords},
      {10, "reproduce is deterministic", 600.0, determinism},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v{false, ""};
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.budget_seconds;
    const bool pass = v.pass && in_time;
    failures += pass ? 0 : 1;
    std::printf("[%s] %2d %-32s %7.3fs (budget %gs)%s  %s\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), seconds,
                c.budget_seconds, in_time ? "" : " OVER BUDGET", v.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
