#include "parade/route.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace parade {

RoutePath RoutePath::from_waypoints(std::vector<Point2> waypoints) {
  if (waypoints.size() < 2)
    throw std::invalid_argument("route: at least two waypoints required");
  RoutePath path;
  path.cumulative_arclength.reserve(waypoints.size());
  path.cumulative_arclength.push_back(0.0);
  for (std::size_t i = 0; i + 1 < waypoints.size(); ++i) {
    if (!waypoints[i].finite())
      throw std::invalid_argument("route.waypoints[" + std::to_string(i) +
                                  "]: non-finite coordinate");
    const double seg = distance(waypoints[i], waypoints[i + 1]);
    if (seg == 0.0)
      throw std::invalid_argument("route.waypoints[" + std::to_string(i + 1) +
                                  "]: coincides with previous waypoint");
    path.cumulative_arclength.push_back(path.cumulative_arclength.back() + seg);
  }
  if (!waypoints.back().finite())
    throw std::invalid_argument("route.waypoints: non-finite coordinate");
  path.waypoints = std::move(waypoints);
  return path;
}

void ParadeSchedule::validate(double total_arclength) const {
  if (step_count == 0) throw std::invalid_argument("schedule.steps: must be >= 1");
  if (points_per_instance == 0)
    throw std::invalid_argument("schedule.points_per_instance: must be >= 1");
  if (tail_arclength.size() != step_count || head_arclength.size() != step_count)
    throw std::invalid_argument("schedule: tail/head arrays must have length steps");
  for (std::size_t k = 0; k < step_count; ++k) {
    const double t = tail_arclength[k];
    const double h = head_arclength[k];
    if (!(t >= 0.0 && t <= h && h <= total_arclength + 1e-9))
      throw std::invalid_argument("schedule: window at step " + std::to_string(k) +
                                  " violates 0 <= tail <= head <= total arclength");
    if (k > 0 && (t < tail_arclength[k - 1] || h < head_arclength[k - 1]))
      throw std::invalid_argument("schedule: tail/head not nondecreasing at step " +
                                  std::to_string(k));
  }
}

ParadeSchedule ParadeSchedule::constant_speed(std::size_t step_count,
                                              std::size_t points_per_instance,
                                              double start, double speed,
                                              double window_length,
                                              double total_arclength) {
  if (speed < 0.0 || window_length < 0.0)
    throw std::invalid_argument("schedule: speed and window_length must be >= 0");
  ParadeSchedule sched;
  sched.step_count = step_count;
  sched.points_per_instance = points_per_instance;
  sched.tail_arclength.reserve(step_count);
  sched.head_arclength.reserve(step_count);
  for (std::size_t k = 0; k < step_count; ++k) {
    const double pos = start + speed * static_cast<double>(k);
    sched.tail_arclength.push_back(std::clamp(pos, 0.0, total_arclength));
    sched.head_arclength.push_back(std::clamp(pos + window_length, 0.0, total_arclength));
  }
  sched.validate(total_arclength);
  return sched;
}

Point2 point_at_arclength(const RoutePath& path, double s) {
  const double total = path.total_arclength();
  if (!(s >= 0.0 && s <= total + 1e-9))
    throw std::out_of_range("arclength out of [0, total] range");
  s = std::min(s, total);
  // First segment whose end arclength reaches s.
  const auto& cum = path.cumulative_arclength;
  auto it = std::lower_bound(cum.begin() + 1, cum.end(), s);
  const std::size_t seg = static_cast<std::size_t>(it - cum.begin()) - 1;
  const double seg_len = cum[seg + 1] - cum[seg];
  const double u = (s - cum[seg]) / seg_len;
  const Point2& a = path.waypoints[seg];
  const Point2& b = path.waypoints[seg + 1];
  return {a.x + u * (b.x - a.x), a.y + u * (b.y - a.y)};
}

RouteInstance route_instance(const RoutePath& path, const ParadeSchedule& sched,
                             std::size_t k) {
  if (k >= sched.step_count)
    throw std::out_of_range("route_instance: step index out of range");
  const double tail = sched.tail_arclength[k];
  const double head = sched.head_arclength[k];
  const std::size_t m = sched.points_per_instance;
  RouteInstance inst;
  inst.step_index = k;
  inst.points.reserve(m);
  if (m == 1) {
    inst.points.push_back(point_at_arclength(path, 0.5 * (tail + head)));
    return inst;
  }
  for (std::size_t j = 0; j < m; ++j) {
    const double u = static_cast<double>(j) / static_cast<double>(m - 1);
    inst.points.push_back(point_at_arclength(path, tail + u * (head - tail)));
  }
  return inst;
}

}  // namespace parade
