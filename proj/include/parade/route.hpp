#pragma once

#include <cstddef>
#include <vector>

#include "parade/geometry.hpp"

namespace parade {

// Piecewise-linear parade route with precomputed cumulative arclengths.
struct RoutePath {
  std::vector<Point2> waypoints;
  std::vector<double> cumulative_arclength;  // same length as waypoints

  static RoutePath from_waypoints(std::vector<Point2> waypoints);

  double total_arclength() const { return cumulative_arclength.back(); }
};

// Per-step occupancy window of the parade along the route, expressed as
// arclength intervals [tail(k), head(k)], both nondecreasing in k.
struct ParadeSchedule {
  std::size_t step_count = 0;
  std::vector<double> tail_arclength;
  std::vector<double> head_arclength;
  std::size_t points_per_instance = 1;

  void validate(double total_arclength) const;

  // Window of fixed length sliding at constant speed, clamped to the route.
  static ParadeSchedule constant_speed(std::size_t step_count,
                                       std::size_t points_per_instance,
                                       double start, double speed,
                                       double window_length,
                                       double total_arclength);
};

struct RouteInstance {
  std::size_t step_index = 0;
  std::vector<Point2> points;
};

Point2 point_at_arclength(const RoutePath& path, double s);

// The m uniformly spaced route points occupied by the parade at step k.
RouteInstance route_instance(const RoutePath& path, const ParadeSchedule& sched,
                             std::size_t k);

}  // namespace parade
