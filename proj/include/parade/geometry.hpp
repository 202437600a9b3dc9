#pragma once

#include <cmath>
#include <vector>

namespace parade {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline bool operator==(const Point2& a, const Point2& b) {
  return a.x == b.x && a.y == b.y;
}

// Axis-aligned rectangle with strictly positive area.
struct Rect {
  Point2 min_corner;
  Point2 max_corner;

  bool valid() const {
    return min_corner.finite() && max_corner.finite() &&
           min_corner.x < max_corner.x && min_corner.y < max_corner.y;
  }
  bool contains_closed(const Point2& p) const {
    return p.x >= min_corner.x && p.x <= max_corner.x &&
           p.y >= min_corner.y && p.y <= max_corner.y;
  }
  // Open interior: boundary excluded.
  bool contains_open(const Point2& p) const {
    return p.x > min_corner.x && p.x < max_corner.x &&
           p.y > min_corner.y && p.y < max_corner.y;
  }
  double width() const { return max_corner.x - min_corner.x; }
  double height() const { return max_corner.y - min_corner.y; }
};

// Workspace bounds plus rectangular building obstacles. Obstacles may
// overlap; the free region is bounds minus the union of open interiors.
struct World {
  Rect bounds;
  std::vector<Rect> obstacles;

  // Throws std::invalid_argument describing the first violated invariant.
  void validate() const;
};

double distance(const Point2& a, const Point2& b);

// True iff p lies inside bounds and not strictly inside any obstacle.
// Obstacle boundary points count as free.
bool point_in_free_space(const World& w, const Point2& p);

// True iff the open segment (a,b) passes through the open interior of some
// obstacle. Grazing an edge or corner does not block.
bool segment_blocked(const World& w, const Point2& a, const Point2& b);

}  // namespace parade
