#pragma once

// Numeric witnesses for the lower bound of 2 and for the circle strategy
// approaching it as d grows. These check finite instances; they prove nothing.

#include <cstddef>
#include <vector>

#include "cornersearch/circle_strategy.hpp"

namespace cornersearch {

struct LowerBoundReport {
  double delta = 0.0;
  std::vector<double> steps;                  // positive steps only, x_1 first
  std::vector<std::size_t> bound_violations;  // 1-based i with x_i > (1 - delta)^i
  double total_distance = 0.0;
  double distance_bound = 0.0;                // 1 / delta
  bool step_cap_hit = false;
};

// Pessimistic recursion for a (2 - delta)-competitive strategy, obtained by
// bounding the optimum's distance by the robot's path length:
//   x_1 = 1 - delta,  x_{i+1} = (1 - delta) * (1 + sum_{j<=i} x_j) - i
// Iterates until a step is nonpositive or step_cap steps are kept.
LowerBoundReport lower_bound_experiment(double delta, std::size_t step_cap = kDefaultStepCap);

inline constexpr std::size_t kDefaultLiftoffWindow = 12;
inline constexpr double kDefaultWitnessDiameterCap = 1e7;
inline constexpr double kGlideStep = 5.0;

// Circle sequence at c = 2 + epsilon on the diameter that the doubling search
// settled on. All checks are derived from `sequence` on demand.
struct AsymptoticReport {
  double epsilon = 0.0;
  std::size_t window = 0;  // N
  double d_used = 0.0;
  bool found = false;      // false: no witness below the diameter cap
  StepSequence sequence;

  // Recursion-generated steps, i.e. without the final leg into the corner.
  std::size_t intermediate_steps() const;
  // x_n >= 1 + (2^n - 1) * epsilon for n <= min(N, intermediate_steps()).
  bool liftoff_ok() const;
  // The first N steps exist and average at least 5.
  bool average_ok() const;
  // Every recursion step x_n with n >= N is at least 5.
  bool glide_ok() const;
  bool reached() const { return sequence.reached_corner(); }
};

// Doubles d from N until the sequence at 2 + epsilon reaches the corner with
// at least N intermediate steps and the lift-off bound holds on them.
AsymptoticReport asymptotic_witness(double epsilon, std::size_t window = kDefaultLiftoffWindow,
                                    double d_cap = kDefaultWitnessDiameterCap);

// Arc length minus chord length for an arc of the given length on a circle of
// diameter d (chord = d * sin(arc / d)). Requires 0 <= arc <= pi * d / 2.
double arc_chord_gap(double d, double arc_length);

// Smallest diameter (to relative 1e-9) at which every arc up to arc_bound
// exceeds its chord by at most max_gap.
double diameter_for_arc_gap(double arc_bound, double max_gap);

}  // namespace cornersearch
