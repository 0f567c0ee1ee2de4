#include "cornersearch/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cornersearch/errors.hpp"

namespace cornersearch {

SearchInstance::SearchInstance(double d) : d_(d) {
  if (!std::isfinite(d) || d <= 0.0) {
    throw DomainError("corner distance d must be positive and finite, got " + std::to_string(d));
  }
}

CartesianPoint to_cartesian(const PolarPoint& p) {
  return {p.r * std::cos(p.theta), p.r * std::sin(p.theta)};
}

double distance(const CartesianPoint& a, const CartesianPoint& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

void Trajectory::validate() const {
  double previous_theta = 0.0;
  for (std::size_t k = 0; k < points.size(); ++k) {
    const PolarPoint& p = points[k];
    const std::string where = "points[" + std::to_string(k) + "]";
    const bool is_last = k + 1 == points.size();
    if (!std::isfinite(p.theta) || !std::isfinite(p.r)) {
      throw InvalidTrajectoryError(where + ": coordinates must be finite");
    }
    if (p.theta < 0.0 || p.theta > kHalfPi) {
      throw InvalidTrajectoryError(where + ": theta outside [0, pi/2]");
    }
    if (p.r < 0.0) {
      throw InvalidTrajectoryError(where + ": negative radius");
    }
    if (p.r == 0.0) {
      if (!is_last || !ends_at_corner) {
        throw InvalidTrajectoryError(where + ": the corner (r = 0) may only be the final point of a trajectory that ends at the corner");
      }
      continue;
    }
    if (is_last && ends_at_corner) {
      throw InvalidTrajectoryError(where + ": ends_at_corner is set but the final point has r > 0");
    }
    if (p.theta <= previous_theta) {
      throw InvalidTrajectoryError(where + ": theta must be strictly increasing");
    }
    previous_theta = p.theta;
  }
  if (ends_at_corner && points.empty()) {
    throw InvalidTrajectoryError("points: ends_at_corner is set but there are no points");
  }
}

double line_distance(const SearchInstance& instance, double theta) {
  if (!(theta >= 0.0 && theta <= kHalfPi)) {
    throw DomainError("theta must lie in [0, pi/2], got " + std::to_string(theta));
  }
  return instance.d() * std::sin(theta);
}

namespace {

// Calls visit(PositionRatio) for positions 0..m-1 of a validated trajectory.
template <class Visit>
void for_each_position(const Trajectory& trajectory, Visit&& visit) {
  const SearchInstance& instance = trajectory.instance;
  CartesianPoint here = to_cartesian({0.0, instance.d()});
  double sight_theta = 0.0;
  double path = 0.0;
  for (std::size_t i = 0; i < trajectory.points.size(); ++i) {
    const CartesianPoint next = to_cartesian(trajectory.points[i]);
    path += distance(here, next);
    PositionRatio pr;
    pr.index = i;
    pr.robot_cost = static_cast<double>(i + 1) * kScanCost + path;
    pr.opt_cost = kScanCost + line_distance(instance, sight_theta);
    pr.ratio = pr.robot_cost / pr.opt_cost;
    visit(pr);
    here = next;
    sight_theta = trajectory.points[i].theta;
  }
}

}  // namespace

RatioCertificate evaluate_trajectory(const Trajectory& trajectory) {
  trajectory.validate();

  RatioCertificate cert;
  cert.complete = trajectory.ends_at_corner;
  for_each_position(trajectory, [&](const PositionRatio& pr) {
    if (cert.per_position.empty() || pr.ratio > cert.worst_ratio) {
      cert.worst_ratio = pr.ratio;
      cert.binding_index = pr.index;
    }
    cert.per_position.push_back(pr);
  });

  if (!cert.complete) {
    // Nothing finds an object hidden beyond the last sight line.
    cert.worst_ratio = std::numeric_limits<double>::infinity();
    cert.binding_index = trajectory.points.size();
  }
  return cert;
}

double worst_ratio(const Trajectory& trajectory) {
  trajectory.validate();
  if (!trajectory.ends_at_corner) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for_each_position(trajectory, [&](const PositionRatio& pr) { worst = std::max(worst, pr.ratio); });
  return worst;
}

}  // namespace cornersearch
