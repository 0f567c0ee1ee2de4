#include "cornersearch/global_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "cornersearch/circle_strategy.hpp"
#include "cornersearch/errors.hpp"
#include "log.hpp"
#include "nelder_mead.hpp"
#include "parallel.hpp"

namespace cornersearch {

namespace {

constexpr double kSeedRatioTolerance = 1e-12;
constexpr double kInitialSimplexStep = 0.1;
constexpr std::size_t kMaxRefinementRounds = 200;
constexpr std::size_t kIterationsPerDimension = 2000;
// Per start; only high-dimensional searches come near it.
constexpr std::size_t kIterationBudget = 100000;

// Parameters: u_1..u_n (log angle weights), then s_1..s_n (log radii). The
// angle weights sit next to a fixed unit slack weight, so
//   theta_k = (pi/2) * W_k / (W_n + 1),  W_k = sum_{j<=k} exp(u_j).
void decode_into(std::span<const double> params, std::size_t n, std::vector<PolarPoint>& points) {
  points.resize(n);
  double cumulative = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    cumulative += std::exp(params[k]);
    points[k].theta = cumulative;
  }
  for (std::size_t k = 0; k < n; ++k) {
    points[k].theta = kHalfPi * points[k].theta / (cumulative + 1.0);
    points[k].r = std::exp(params[n + k]);
  }
}

std::vector<PolarPoint> decode(std::span<const double> params, std::size_t n) {
  std::vector<PolarPoint> points;
  decode_into(params, n, points);
  return points;
}

std::vector<double> encode(const std::vector<PolarPoint>& points) {
  const std::size_t n = points.size();
  std::vector<double> params(2 * n);
  const double t_last = points.back().theta / kHalfPi;
  const double scale = 1.0 / (1.0 - t_last);  // W_n + 1
  double previous = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double t = points[k].theta / kHalfPi;
    params[k] = std::log((t - previous) * scale);
    params[n + k] = std::log(points[k].r);
    previous = t;
  }
  return params;
}

Trajectory with_corner(double d, std::vector<PolarPoint> points) {
  points.push_back({kHalfPi, 0.0});
  return Trajectory{SearchInstance(d), std::move(points), true};
}

// Objective. The trajectory buffer is reused across calls.
double candidate_ratio(std::span<const double> params, std::size_t n, Trajectory& scratch) {
  decode_into(params, n, scratch.points);
  scratch.points.push_back({kHalfPi, 0.0});
  try {
    return worst_ratio(scratch);
  } catch (const InvalidTrajectoryError&) {
    return std::numeric_limits<double>::infinity();
  }
}

std::vector<PolarPoint> circle_start(double d, std::size_t n) {
  const OptimalRatio circle = solve_optimal_c(d, kSeedRatioTolerance);
  if (scan_count(circle.sequence) == n) {
    std::vector<PolarPoint> points = to_trajectory(circle.sequence).points;
    points.pop_back();
    return points;
  }
  std::vector<PolarPoint> points(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double phi = kHalfPi * static_cast<double>(k + 1) / static_cast<double>(n + 1);
    points[k] = {phi, d * std::cos(phi)};
  }
  return points;
}

std::vector<PolarPoint> random_start(double d, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, kHalfPi);
  std::uniform_real_distribution<double> radius(0.05 * d, d);
  std::vector<PolarPoint> points(n);
  for (;;) {
    for (auto& p : points) p = {angle(rng), radius(rng)};
    std::sort(points.begin(), points.end(), [](const PolarPoint& a, const PolarPoint& b) { return a.theta < b.theta; });
    bool distinct = points.front().theta > 0.0;
    for (std::size_t k = 1; k < n; ++k) distinct = distinct && points[k].theta > points[k - 1].theta;
    if (distinct) return points;
  }
}

struct LocalOptimum {
  std::vector<double> params;
  double value = std::numeric_limits<double>::infinity();
  std::size_t iterations = 0;
  bool converged = false;
};

// Restarts the simplex around the incumbent until a round improves the ratio
// by less than kConvergenceStep or the iteration budget runs out.
LocalOptimum refine(double d, std::size_t n, const std::vector<PolarPoint>& start) {
  Trajectory scratch = with_corner(d, {});
  const auto objective = [&](const std::vector<double>& x) { return candidate_ratio(x, n, scratch); };
  LocalOptimum best;
  best.params = encode(start);
  best.value = objective(best.params);
  const std::size_t cap = kIterationsPerDimension * 2 * n;
  for (std::size_t round = 0; round < kMaxRefinementRounds && best.iterations < kIterationBudget; ++round) {
    const std::size_t allowed = std::min(cap, kIterationBudget - best.iterations);
    detail::SimplexResult run = detail::nelder_mead(objective, best.params, kInitialSimplexStep, allowed);
    best.iterations += run.iterations;
    const double improvement = best.value - run.value;
    if (run.value < best.value) {
      best.params = std::move(run.x);
      best.value = run.value;
    }
    if (!(improvement >= kConvergenceStep)) {
      best.converged = true;
      break;
    }
  }
  return best;
}

OptimizationResult direct_walk(double d) {
  OptimizationResult result;
  result.d = d;
  result.n = 0;
  result.c_achieved = evaluate_trajectory(result.trajectory()).worst_ratio;
  result.converged = true;
  return result;
}

template <bool Parallel>
OptimizationResult optimize(double d, std::size_t n, std::span<const std::uint64_t> random_seeds) {
  const SearchInstance instance(d);
  if (n == 0) return direct_walk(d);
  if (n > kComfortableScanLimit) {
    detail::log_warning("free optimization with n = " + std::to_string(n) +
                        " scan points is slow and may stop at a local optimum");
  }

  const std::size_t starts = random_seeds.size() + 1;
  std::vector<LocalOptimum> optima(starts);
  const auto run_start = [&](std::size_t k) {
    optima[k] = refine(d, n, k == 0 ? circle_start(d, n) : random_start(d, n, random_seeds[k - 1]));
  };
  if constexpr (Parallel) {
    detail::parallel_for(starts, run_start);
  } else {
    for (std::size_t k = 0; k < starts; ++k) run_start(k);
  }

  std::size_t winner = 0;
  for (std::size_t k = 1; k < starts; ++k) {
    if (optima[k].value < optima[winner].value) winner = k;
  }

  OptimizationResult result;
  result.d = d;
  result.n = n;
  result.points = decode(optima[winner].params, n);
  result.c_achieved = evaluate_trajectory(result.trajectory()).worst_ratio;
  result.iterations = optima[winner].iterations;
  result.converged = optima[winner].converged;
  return result;
}

}  // namespace

Trajectory OptimizationResult::trajectory() const { return with_corner(d, points); }

std::vector<std::uint64_t> restart_seeds(std::size_t restarts, std::uint64_t base_seed) {
  std::vector<std::uint64_t> seeds(restarts);
  for (std::size_t k = 0; k < restarts; ++k) seeds[k] = base_seed + k;
  return seeds;
}

OptimizationResult global_optimize(double d, std::size_t n, std::span<const std::uint64_t> random_seeds) {
  return optimize<true>(d, n, random_seeds);
}

OptimizationResult global_optimize(double d, std::size_t n, std::size_t restarts, std::uint64_t base_seed) {
  if (restarts == 0) throw DomainError("restarts must be at least 1");
  const std::vector<std::uint64_t> seeds = restart_seeds(restarts, base_seed);
  return global_optimize(d, n, seeds);
}

OptimizationResult global_optimize_serial(double d, std::size_t n, std::span<const std::uint64_t> random_seeds) {
  return optimize<false>(d, n, random_seeds);
}

double gap_to_circle(double d, std::size_t restarts, std::uint64_t base_seed, std::optional<std::size_t> n) {
  const OptimalRatio circle = solve_optimal_c(d);
  const std::size_t scans = n.value_or(scan_count(circle.sequence));
  return circle.c_opt / global_optimize(d, scans, restarts, base_seed).c_achieved - 1.0;
}

}  // namespace cornersearch
