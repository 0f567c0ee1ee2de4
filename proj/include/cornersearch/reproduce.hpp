#pragma once

// Fixed suite of reference numbers for the corner search problem: threshold
// table, the d = 40 optimum and its bracket, the peak of the ratio curve, the
// d = 1 free optimum, the circle-vs-free gap, the lower-bound recursion, the
// large-d trend, oracle agreement and the unit-step baseline.

#include <string>
#include <vector>

namespace cornersearch {

struct CheckResult {
  std::string id;
  std::string description;
  std::string measured;
  std::string expected;
  bool pass = false;
};

struct ThresholdReference {
  std::size_t n_scans;
  double d_max;
  double c_at_d_max;
};

inline constexpr ThresholdReference kThresholdReference[] = {
    {0, 0.618034, 1.618034}, {1, 1.530414, 2.040287}, {2, 2.799395, 2.155363},
    {3, 4.400876, 2.168544}, {4, 6.316892, 2.147994}, {5, 8.514200, 2.118498},
};
inline constexpr double kThresholdTolerance = 1e-5;

inline constexpr double kOptimumAt40 = 2.001525;
inline constexpr double kPeakDistance = 4.40088;
inline constexpr double kPeakRatio = 2.168544;
inline constexpr double kFreeOptimumAt1 = 1.808201;

// Solver output at d = 2560 (tol 1e-9), frozen as a regression constant.
inline constexpr double kOptimumAt2560 = 2.0000003056;

// Every check, in a fixed order. Deterministic: no timings, fixed seeds.
std::vector<CheckResult> run_reproduction_suite();

// One line per check plus a summary line.
std::string render_reproduction_report(const std::vector<CheckResult>& checks);

bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace cornersearch
