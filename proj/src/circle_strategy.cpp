#include "cornersearch/circle_strategy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cornersearch/errors.hpp"
#include "log.hpp"
#include "parallel.hpp"

namespace cornersearch {

namespace {

constexpr double kRatioUpperBracket = std::numbers::pi + 1.0;
constexpr double kMaxThresholdDistance = 1e9;

void require_tolerance(double tol) {
  if (!std::isfinite(tol) || tol <= 0.0) {
    throw DomainError("tolerance must be positive, got " + std::to_string(tol));
  }
}

double sample_at(double lo, double hi, std::size_t k, std::size_t n) {
  if (k + 1 == n) return hi;
  return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
}

void validate_range(double d_min, double d_max, std::size_t n_samples) {
  if (!std::isfinite(d_min) || !std::isfinite(d_max) || d_min <= 0.0 || d_max <= d_min) {
    throw DomainError("curve range must satisfy 0 < d_min < d_max");
  }
  if (n_samples < 2) {
    throw DomainError("curve needs at least 2 samples");
  }
}

CurvePoint curve_sample(double d, double tol) {
  const OptimalRatio best = solve_optimal_c(d, tol);
  return {d, best.c_opt, scan_count(best.sequence), best.c_opt - 1.0};
}

std::size_t optimal_scan_count(double d) {
  return scan_count(solve_optimal_c(d, kScanCountRatioTolerance).sequence);
}

}  // namespace

std::string_view to_string(SequenceStatus status) {
  switch (status) {
    case SequenceStatus::ReachedCorner:
      return "ReachedCorner";
    case SequenceStatus::Collapsed:
      return "Collapsed";
    case SequenceStatus::StepCapExceeded:
      return "StepCapExceeded";
  }
  return "Unknown";
}

StepSequence simulate_sequence(double c, double d, std::size_t step_cap) {
  if (!std::isfinite(c) || c <= 1.0) {
    throw DomainError("tested ratio c must exceed 1, got " + std::to_string(c));
  }
  const SearchInstance instance(d);

  StepSequence seq;
  seq.c = c;
  seq.d = d;

  double path = 0.0;
  double next = c - 1.0;
  for (;;) {
    if (std::isnan(next)) {
      throw InternalError("circle recursion produced NaN at step " + std::to_string(seq.steps.size() + 1));
    }
    const double to_corner = d * std::cos(seq.cumulative_angle);
    if (to_corner <= next) {
      seq.steps.push_back(to_corner);
      seq.angles.push_back(kHalfPi - seq.cumulative_angle);
      seq.cumulative_angle = kHalfPi;
      seq.status = SequenceStatus::ReachedCorner;
      return seq;
    }
    if (next <= 0.0 || next > d) {
      seq.status = SequenceStatus::Collapsed;
      seq.rejected_step = next;
      return seq;
    }
    if (seq.steps.size() >= step_cap) {
      seq.status = SequenceStatus::StepCapExceeded;
      return seq;
    }

    const double angle = std::asin(next / d);
    seq.steps.push_back(next);
    seq.angles.push_back(angle);
    seq.cumulative_angle += angle;
    path += next;
    if (seq.cumulative_angle >= kHalfPi) {
      // Rounding put the step on the corner; it is the final leg.
      seq.status = SequenceStatus::ReachedCorner;
      return seq;
    }

    const auto i = static_cast<double>(seq.steps.size());
    next = c * (1.0 + d * std::sin(seq.cumulative_angle)) - (i + 1.0) - path;
  }
}

Trajectory to_trajectory(const StepSequence& sequence) {
  if (!sequence.reached_corner()) {
    throw DomainError("only a sequence that reached the corner converts to a trajectory");
  }
  Trajectory traj{SearchInstance(sequence.d), {}, true};
  double phi = 0.0;
  for (std::size_t k = 0; k + 1 < sequence.angles.size(); ++k) {
    phi += sequence.angles[k];
    traj.points.push_back({phi, sequence.d * std::cos(phi)});
  }
  traj.points.push_back({kHalfPi, 0.0});
  return traj;
}

OptimalRatio solve_optimal_c(double d, double tol, std::size_t step_cap) {
  const SearchInstance instance(d);
  require_tolerance(tol);

  const auto feasible = [&](double c) {
    const StepSequence seq = simulate_sequence(c, d, step_cap);
    if (seq.status == SequenceStatus::StepCapExceeded) {
      detail::log_warning("step cap hit at c = " + std::to_string(c) + ", d = " + std::to_string(d) +
                          "; treating c as infeasible");
    }
    return seq.reached_corner();
  };

  double lo = 1.0 + tol;
  double hi = kRatioUpperBracket;
  if (!feasible(hi)) {
    throw InternalError("upper bracket c = pi + 1 is infeasible for d = " + std::to_string(d));
  }
  if (feasible(lo)) {
    hi = lo;
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (feasible(mid) ? hi : lo) = mid;
  }

  OptimalRatio result;
  result.c_opt = hi;
  result.sequence = simulate_sequence(hi + tol, d, step_cap);
  return result;
}

std::size_t scan_count(const StepSequence& sequence) {
  if (!sequence.reached_corner()) {
    throw DomainError(std::string("scan count needs a sequence that reached the corner, got ") +
                      std::string(to_string(sequence.status)));
  }
  return sequence.steps.size() - 1;
}

ThresholdRow find_threshold(std::size_t n, double tol) {
  require_tolerance(tol);

  double lo = tol;
  if (optimal_scan_count(lo) > n) {
    throw InternalError("scan count exceeds n at the smallest bracket d = " + std::to_string(lo));
  }
  double hi = 2.0 * lo;
  while (optimal_scan_count(hi) <= n) {
    lo = hi;
    hi *= 2.0;
    if (hi > kMaxThresholdDistance) {
      throw InternalError("threshold bracket for n = " + std::to_string(n) + " did not close");
    }
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (optimal_scan_count(mid) <= n ? lo : hi) = mid;
  }
  return {n, lo, solve_optimal_c(lo, kScanCountRatioTolerance).c_opt};
}

std::vector<ThresholdRow> threshold_table(std::size_t max_scans, double tol) {
  require_tolerance(tol);
  std::vector<ThresholdRow> rows(max_scans + 1);
  detail::parallel_for(rows.size(), [&](std::size_t n) { rows[n] = find_threshold(n, tol); });
  return rows;
}

std::vector<CurvePoint> ratio_curve(double d_min, double d_max, std::size_t n_samples, double tol) {
  validate_range(d_min, d_max, n_samples);
  require_tolerance(tol);
  std::vector<CurvePoint> curve(n_samples);
  detail::parallel_for(n_samples, [&](std::size_t k) {
    curve[k] = curve_sample(sample_at(d_min, d_max, k, n_samples), tol);
  });
  return curve;
}

std::vector<CurvePoint> ratio_curve_serial(double d_min, double d_max, std::size_t n_samples,
                                           double tol) {
  validate_range(d_min, d_max, n_samples);
  require_tolerance(tol);
  std::vector<CurvePoint> curve;
  curve.reserve(n_samples);
  for (std::size_t k = 0; k < n_samples; ++k) {
    curve.push_back(curve_sample(sample_at(d_min, d_max, k, n_samples), tol));
  }
  return curve;
}

}  // namespace cornersearch
