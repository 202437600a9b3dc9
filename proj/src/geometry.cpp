#include "parade/geometry.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace parade {

namespace {

constexpr double kClipTol = 1e-12;

// Parameter interval (t0,t1) of p + t*d where the coordinate is strictly
// inside (lo, hi). Returns false when the interval is empty.
bool strict_slab_interval(double p, double d, double lo, double hi,
                          double& t0, double& t1) {
  if (d == 0.0) {
    if (p > lo && p < hi) {
      t0 = -std::numeric_limits<double>::infinity();
      t1 = std::numeric_limits<double>::infinity();
      return true;
    }
    return false;
  }
  double ta = (lo - p) / d;
  double tb = (hi - p) / d;
  if (ta > tb) std::swap(ta, tb);
  t0 = ta;
  t1 = tb;
  return true;
}

bool segment_hits_interior(const Rect& r, const Point2& a, const Point2& b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  double lo = 0.0, hi = 1.0;
  double t0, t1;
  if (!strict_slab_interval(a.x, dx, r.min_corner.x, r.max_corner.x, t0, t1))
    return false;
  lo = std::max(lo, t0);
  hi = std::min(hi, t1);
  if (!strict_slab_interval(a.y, dy, r.min_corner.y, r.max_corner.y, t0, t1))
    return false;
  lo = std::max(lo, t0);
  hi = std::min(hi, t1);
  // An interval of zero (or numerically negligible) length means the segment
  // only grazes an edge or corner.
  return hi - lo > kClipTol;
}

}  // namespace

void World::validate() const {
  if (!bounds.valid())
    throw std::invalid_argument("world.bounds: degenerate or non-finite rectangle");
  for (std::size_t i = 0; i < obstacles.size(); ++i) {
    const Rect& o = obstacles[i];
    if (!o.valid())
      throw std::invalid_argument("world.obstacles[" + std::to_string(i) +
                                  "]: degenerate or non-finite rectangle");
    const bool overlaps =
        o.min_corner.x < bounds.max_corner.x && o.max_corner.x > bounds.min_corner.x &&
        o.min_corner.y < bounds.max_corner.y && o.max_corner.y > bounds.min_corner.y;
    if (!overlaps)
      throw std::invalid_argument("world.obstacles[" + std::to_string(i) +
                                  "]: does not intersect bounds");
  }
  // Coarse free-region check; boundary grid points included since obstacle
  // boundaries count as free.
  constexpr int kGrid = 64;
  for (int ix = 0; ix <= kGrid; ++ix) {
    for (int iy = 0; iy <= kGrid; ++iy) {
      Point2 p{bounds.min_corner.x + bounds.width() * ix / kGrid,
               bounds.min_corner.y + bounds.height() * iy / kGrid};
      if (point_in_free_space(*this, p)) return;
    }
  }
  throw std::invalid_argument("world: free region appears empty");
}

double distance(const Point2& a, const Point2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

bool point_in_free_space(const World& w, const Point2& p) {
  if (!p.finite() || !w.bounds.contains_closed(p)) return false;
  for (const Rect& o : w.obstacles) {
    if (o.contains_open(p)) return false;
  }
  return true;
}

bool segment_blocked(const World& w, const Point2& a, const Point2& b) {
  for (const Rect& o : w.obstacles) {
    if (segment_hits_interior(o, a, b)) return true;
  }
  return false;
}

}  // namespace parade
