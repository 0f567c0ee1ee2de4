#pragma once

// Free placement of n intermediate scan points: minimize the adversary ratio
// over all 2n polar coordinates with a multi-start Nelder-Mead search. Angles
// are encoded as positive increments that always sum below pi/2 and radii as
// logarithms, so every candidate is a valid trajectory.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cornersearch/geometry.hpp"

namespace cornersearch {

inline constexpr double kConvergenceStep = 1e-10;
inline constexpr std::size_t kComfortableScanLimit = 3;

struct OptimizationResult {
  double d = 0.0;
  std::size_t n = 0;
  std::vector<PolarPoint> points;  // intermediate scan points, corner excluded
  double c_achieved = 0.0;
  std::size_t iterations = 0;      // simplex iterations of the winning start
  bool converged = false;

  // points followed by the corner.
  Trajectory trajectory() const;
};

// Start 0 is the circle-strategy placement (its optimal points when it uses n
// scans, evenly spaced semicircle points otherwise); each seed in
// random_seeds adds one uniformly random monotone placement. The best local
// optimum wins, ties going to the earlier start. n = 0 is the direct walk to
// the corner with ratio 1 + d.
OptimizationResult global_optimize(double d, std::size_t n, std::span<const std::uint64_t> random_seeds);

// Seeds base_seed, base_seed + 1, ..., base_seed + restarts - 1.
OptimizationResult global_optimize(double d, std::size_t n, std::size_t restarts,
                                   std::uint64_t base_seed = 0);

// Single-threaded reference for global_optimize.
OptimizationResult global_optimize_serial(double d, std::size_t n,
                                          std::span<const std::uint64_t> random_seeds);

std::vector<std::uint64_t> restart_seeds(std::size_t restarts, std::uint64_t base_seed);

// circle c_opt / free optimum - 1, with n defaulting to the circle's scan count.
double gap_to_circle(double d, std::size_t restarts, std::uint64_t base_seed = 0,
                     std::optional<std::size_t> n = std::nullopt);

}  // namespace cornersearch
