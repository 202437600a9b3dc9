#include <doctest.h>

#include <stdexcept>

#include "parade/route.hpp"

using namespace parade;

namespace {

RoutePath l_path() {
  return RoutePath::from_waypoints({{0, 0}, {10, 0}, {10, 10}});
}

}  // namespace

TEST_CASE("point_at_arclength interpolation") {
  const RoutePath straight = RoutePath::from_waypoints({{0, 0}, {10, 0}});
  CHECK(point_at_arclength(straight, 0.0) == Point2{0, 0});
  CHECK(point_at_arclength(straight, 7.5) == Point2{7.5, 0});
  CHECK(point_at_arclength(l_path(), 15.0) == Point2{10, 5});
  CHECK_THROWS_AS(point_at_arclength(straight, -1.0), std::out_of_range);
  CHECK_THROWS_AS(point_at_arclength(straight, 10.1), std::out_of_range);
}

TEST_CASE("route path validation") {
  CHECK_THROWS_AS(RoutePath::from_waypoints({{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(RoutePath::from_waypoints({{0, 0}, {0, 0}, {1, 1}}),
                  std::invalid_argument);
}

TEST_CASE("route_instance uniform split") {
  const RoutePath straight = RoutePath::from_waypoints({{0, 0}, {10, 0}});
  ParadeSchedule sched{1, {0.0}, {10.0}, 3};
  const RouteInstance inst = route_instance(straight, sched, 0);
  REQUIRE(inst.points.size() == 3);
  CHECK(inst.points[0] == Point2{0, 0});
  CHECK(inst.points[1] == Point2{5, 0});
  CHECK(inst.points[2] == Point2{10, 0});
}

TEST_CASE("route_instance degenerate window") {
  const RoutePath straight = RoutePath::from_waypoints({{0, 0}, {10, 0}});
  ParadeSchedule sched{1, {4.0}, {4.0}, 5};
  const RouteInstance inst = route_instance(straight, sched, 0);
  REQUIRE(inst.points.size() == 5);
  for (const Point2& p : inst.points) CHECK(p == Point2{4, 0});
}

TEST_CASE("route_instance window across a bend") {
  ParadeSchedule sched{1, {5.0}, {15.0}, 3};
  const RouteInstance inst = route_instance(l_path(), sched, 0);
  REQUIRE(inst.points.size() == 3);
  CHECK(inst.points[0] == Point2{5, 0});
  CHECK(inst.points[1] == Point2{10, 0});
  CHECK(inst.points[2] == Point2{10, 5});
  CHECK_THROWS_AS(route_instance(l_path(), sched, 1), std::out_of_range);
}

TEST_CASE("route_instance consistency with point_at_arclength") {
  const RoutePath path =
      RoutePath::from_waypoints({{0, 0}, {3, 4}, {3, 10}, {-2, 10}});
  const ParadeSchedule sched = ParadeSchedule::constant_speed(
      8, 7, 0.0, 1.5, 6.0, path.total_arclength());
  for (std::size_t k = 0; k < sched.step_count; ++k) {
    const RouteInstance inst = route_instance(path, sched, k);
    REQUIRE(inst.points.size() == 7);
    const double tail = sched.tail_arclength[k];
    const double head = sched.head_arclength[k];
    double spacing_sum = 0.0;
    for (std::size_t j = 0; j < 7; ++j) {
      const double s = tail + (head - tail) * static_cast<double>(j) / 6.0;
      const Point2 expect = point_at_arclength(path, s);
      CHECK(distance(inst.points[j], expect) < 1e-9);
      if (j) spacing_sum += distance(inst.points[j], inst.points[j - 1]);
    }
    // Windows chosen within a single segment sum exactly; across bends the
    // chord sum still cannot exceed the arclength span.
    CHECK(spacing_sum <= head - tail + 1e-9);
  }
}

TEST_CASE("constant speed schedule clamps to the route") {
  const ParadeSchedule sched = ParadeSchedule::constant_speed(10, 3, -5.0, 2.0, 4.0, 10.0);
  CHECK(sched.tail_arclength.front() == 0.0);
  CHECK(sched.head_arclength.back() == 10.0);
  CHECK_NOTHROW(sched.validate(10.0));
}

TEST_CASE("schedule validation rejects bad windows") {
  ParadeSchedule bad{2, {0.0, 1.0}, {5.0, 0.5}, 3};
  CHECK_THROWS_AS(bad.validate(10.0), std::invalid_argument);
  ParadeSchedule shrinking{2, {2.0, 1.0}, {5.0, 5.0}, 3};
  CHECK_THROWS_AS(shrinking.validate(10.0), std::invalid_argument);
}
