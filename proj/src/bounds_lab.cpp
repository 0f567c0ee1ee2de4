#include "cornersearch/bounds_lab.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cornersearch/errors.hpp"

namespace cornersearch {

LowerBoundReport lower_bound_experiment(double delta, std::size_t step_cap) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw DomainError("delta must lie in (0, 1), got " + std::to_string(delta));
  }
  LowerBoundReport report;
  report.delta = delta;
  report.distance_bound = 1.0 / delta;

  const double keep = 1.0 - delta;
  double next = keep;
  double bound = keep;
  while (next > 0.0) {
    if (report.steps.size() >= step_cap) {
      report.step_cap_hit = true;
      break;
    }
    report.steps.push_back(next);
    report.total_distance += next;
    const std::size_t i = report.steps.size();
    if (next > bound + kGeomTolerance) report.bound_violations.push_back(i);
    next = keep * (1.0 + report.total_distance) - static_cast<double>(i);
    bound *= keep;
  }
  return report;
}

std::size_t AsymptoticReport::intermediate_steps() const {
  if (sequence.steps.empty()) return 0;
  return reached() ? sequence.steps.size() - 1 : sequence.steps.size();
}

bool AsymptoticReport::liftoff_ok() const {
  const std::size_t checked = std::min(window, intermediate_steps());
  for (std::size_t n = 1; n <= checked; ++n) {
    const double floor = 1.0 + (std::ldexp(1.0, static_cast<int>(n)) - 1.0) * epsilon;
    if (sequence.steps[n - 1] < floor - kGeomTolerance * floor) return false;
  }
  return true;
}

bool AsymptoticReport::average_ok() const {
  if (window == 0 || intermediate_steps() < window) return false;
  double sum = 0.0;
  for (std::size_t n = 0; n < window; ++n) sum += sequence.steps[n];
  return sum / static_cast<double>(window) >= kGlideStep;
}

bool AsymptoticReport::glide_ok() const {
  const std::size_t last = intermediate_steps();
  for (std::size_t n = std::max<std::size_t>(window, 1); n <= last; ++n) {
    if (sequence.steps[n - 1] < kGlideStep) return false;
  }
  return true;
}

AsymptoticReport asymptotic_witness(double epsilon, std::size_t window, double d_cap) {
  if (!std::isfinite(epsilon) || epsilon <= 0.0) {
    throw DomainError("epsilon must be positive, got " + std::to_string(epsilon));
  }
  if (window == 0) throw DomainError("window N must be at least 1");
  if (!std::isfinite(d_cap) || d_cap <= 0.0) throw DomainError("diameter cap must be positive");

  AsymptoticReport report;
  report.epsilon = epsilon;
  report.window = window;
  for (double d = static_cast<double>(window); d <= d_cap; d *= 2.0) {
    report.d_used = d;
    report.sequence = simulate_sequence(2.0 + epsilon, d);
    if (report.reached() && report.intermediate_steps() >= window && report.liftoff_ok()) {
      report.found = true;
      break;
    }
  }
  return report;
}

double arc_chord_gap(double d, double arc_length) {
  const SearchInstance instance(d);
  if (!std::isfinite(arc_length) || arc_length < 0.0) {
    throw DomainError("arc length must be nonnegative, got " + std::to_string(arc_length));
  }
  if (arc_length > std::numbers::pi * d / 2.0) {
    throw DomainError("arc of length " + std::to_string(arc_length) +
                      " is longer than the semicircle of diameter " + std::to_string(d));
  }
  return arc_length - d * std::sin(arc_length / d);
}

double diameter_for_arc_gap(double arc_bound, double max_gap) {
  if (!std::isfinite(arc_bound) || arc_bound <= 0.0) throw DomainError("arc bound must be positive");
  if (!std::isfinite(max_gap) || max_gap <= 0.0) throw DomainError("gap bound must be positive");

  // The gap for a fixed arc shrinks as d grows; the semicircle must hold the arc.
  double lo = 2.0 * arc_bound / std::numbers::pi;
  if (arc_chord_gap(lo, arc_bound) <= max_gap) return lo;
  double hi = 2.0 * lo;
  while (arc_chord_gap(hi, arc_bound) > max_gap) {
    lo = hi;
    hi *= 2.0;
  }
  while (hi - lo > 1e-9 * hi) {
    const double mid = 0.5 * (lo + hi);
    (arc_chord_gap(mid, arc_bound) <= max_gap ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace cornersearch
