#pragma once

// Cost model for searching around a single convex corner.
//
// Units are normalized so that one scan costs one time unit and the robot
// travels at unit speed; an instance is then fully described by the distance
// d from the start A to the corner B. Positions are given in polar
// coordinates about the corner: the start sits at (theta = 0, r = d) and the
// sight line of a scan point is the ray from B through that point.

#include <cstddef>
#include <numbers>
#include <vector>

namespace cornersearch {

inline constexpr double kHalfPi = std::numbers::pi / 2.0;

// Time charged for one scan.
inline constexpr double kScanCost = 1.0;
// The start position sees up to the line A-B for free.
inline constexpr bool kStartScanCharged = false;
// Absolute tolerance for geometric comparisons.
inline constexpr double kGeomTolerance = 1e-12;

class SearchInstance {
 public:
  // Throws DomainError unless d is finite and positive.
  explicit SearchInstance(double d);

  double d() const { return d_; }

 private:
  double d_;
};

struct PolarPoint {
  double theta = 0.0;  // radians in [0, pi/2]
  double r = 0.0;      // distance to the corner
};

struct CartesianPoint {
  double x = 0.0;
  double y = 0.0;
};

CartesianPoint to_cartesian(const PolarPoint& p);
double distance(const CartesianPoint& a, const CartesianPoint& b);

// Ordered scan points after the start. When ends_at_corner is set the last
// point must be the corner itself (r == 0); its angle is not used.
struct Trajectory {
  SearchInstance instance;
  std::vector<PolarPoint> points;
  bool ends_at_corner = false;

  // Throws InvalidTrajectoryError when theta is not strictly increasing
  // (starting from the start's theta = 0), an angle leaves [0, pi/2], a radius
  // is not positive, or a corner point appears anywhere but last.
  void validate() const;
};

struct PositionRatio {
  std::size_t index = 0;  // 0 is the start
  double robot_cost = 0.0;
  double opt_cost = 0.0;
  double ratio = 0.0;
};

struct RatioCertificate {
  std::vector<PositionRatio> per_position;
  double worst_ratio = 0.0;
  std::size_t binding_index = 0;
  // False when the trajectory never reaches the corner; worst_ratio is then +inf.
  bool complete = true;
};

// Perpendicular distance from the start to the line through the corner at
// angle theta: d * sin(theta). Throws DomainError outside [0, pi/2].
double line_distance(const SearchInstance& instance, double theta);

// Adversary evaluation: for each position i the object is hidden just beyond
// its sight line and found at position i + 1. The robot pays one scan per
// position 1..i+1 plus its Euclidean path; the optimum pays one scan plus
// line_distance(theta_i).
RatioCertificate evaluate_trajectory(const Trajectory& trajectory);

// evaluate_trajectory(trajectory).worst_ratio without building the certificate.
double worst_ratio(const Trajectory& trajectory);

}  // namespace cornersearch
