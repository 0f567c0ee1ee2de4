#pragma once

// Scan points restricted to the semicircle with diameter A-B.
//
// Every intermediate scan is placed so that the adversary ratio at the
// previous position equals the tested ratio c exactly:
//
//   x_1     = c - 1
//   x_{i+1} = c * (1 + d * sin(sum_{j<=i} asin(x_j / d))) - (i + 1) - sum_{j<=i} x_j
//
// A ratio c is achievable iff this sequence reaches the corner before a step
// turns nonpositive. Feasibility is monotone in c, so the optimal ratio is
// found by bisection.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "cornersearch/geometry.hpp"

namespace cornersearch {

inline constexpr std::size_t kDefaultStepCap = 100000;
inline constexpr double kDefaultRatioTolerance = 1e-9;
inline constexpr double kDefaultThresholdTolerance = 1e-7;
// Ratio tolerance used when counting scans for threshold search. Just past the
// zero-scan threshold the one-scan gain over 1 + d is quadratic in the excess
// distance, so a 1e-9 bracket misplaces that threshold by ~2e-5.
inline constexpr double kScanCountRatioTolerance = 1e-13;

enum class SequenceStatus { ReachedCorner, Collapsed, StepCapExceeded };

std::string_view to_string(SequenceStatus status);

struct StepSequence {
  double c = 0.0;
  double d = 0.0;
  // Chord lengths. On ReachedCorner the last entry is the (possibly shorter)
  // leg into the corner.
  std::vector<double> steps;
  std::vector<double> angles;  // asin(step / d)
  SequenceStatus status = SequenceStatus::Collapsed;
  double cumulative_angle = 0.0;
  // On Collapsed, the offending next step value (<= 0 or > d).
  double rejected_step = 0.0;

  bool reached_corner() const { return status == SequenceStatus::ReachedCorner; }
};

// Iterates the recursion from x_1 = c - 1. Throws DomainError unless c > 1
// and d > 0; throws InternalError if the recursion yields NaN.
StepSequence simulate_sequence(double c, double d, std::size_t step_cap = kDefaultStepCap);

// Scan points of a ReachedCorner sequence as a trajectory on the semicircle,
// ending at the corner.
Trajectory to_trajectory(const StepSequence& sequence);

struct OptimalRatio {
  double c_opt = 0.0;
  StepSequence sequence;  // simulated at c_opt + tol
};

// Bisection over c in [1 + tol, pi + 1]. StepCapExceeded counts as infeasible.
OptimalRatio solve_optimal_c(double d, double tol = kDefaultRatioTolerance,
                             std::size_t step_cap = kDefaultStepCap);

// Scan stops strictly between start and corner. Throws DomainError unless the
// sequence reached the corner.
std::size_t scan_count(const StepSequence& sequence);

struct ThresholdRow {
  std::size_t n_scans = 0;
  double d_max = 0.0;
  double c_at_d_max = 0.0;
};

// Largest d whose optimal sequence uses exactly n intermediate scans.
ThresholdRow find_threshold(std::size_t n, double tol = kDefaultThresholdTolerance);

// Rows 0..max_scans. Rows are independent and computed in parallel.
std::vector<ThresholdRow> threshold_table(std::size_t max_scans,
                                          double tol = kDefaultThresholdTolerance);

struct CurvePoint {
  double d = 0.0;
  double c_opt = 0.0;
  std::size_t n_scans = 0;
  double x1 = 0.0;
};

// n_samples values of d spaced uniformly over [d_min, d_max], both ends
// included, in ascending order. OpenMP-parallel over samples.
std::vector<CurvePoint> ratio_curve(double d_min, double d_max, std::size_t n_samples,
                                    double tol = kDefaultRatioTolerance);

// Single-threaded reference for ratio_curve; results are identical.
std::vector<CurvePoint> ratio_curve_serial(double d_min, double d_max, std::size_t n_samples,
                                           double tol = kDefaultRatioTolerance);

}  // namespace cornersearch
