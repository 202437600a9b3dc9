#include "parade/svg_render.hpp"

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

namespace parade {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

std::string render_frame(const Scenario& s, const StepRecord& rec,
                         const RouteInstance& inst, const CandidateSet& cands) {
  const Rect& b = s.world.bounds;
  // SVG y grows downward; mirror about the bounds midline.
  auto sy = [&](double y) { return b.max_corner.y + b.min_corner.y - y; };
  const double dim = std::max(b.width(), b.height());
  const double r_candidate = 0.003 * dim;
  const double r_route = 0.006 * dim;
  const double r_guard = 0.010 * dim;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" +
         num(b.min_corner.x) + " " + num(b.min_corner.y) + " " + num(b.width()) +
         " " + num(b.height()) + "\" width=\"800\">\n";
  svg += "<rect x=\"" + num(b.min_corner.x) + "\" y=\"" + num(b.min_corner.y) +
         "\" width=\"" + num(b.width()) + "\" height=\"" + num(b.height()) +
         "\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"" +
         num(0.002 * dim) + "\"/>\n";

  for (const Rect& o : s.world.obstacles) {
    svg += "<rect class=\"obstacle\" x=\"" + num(o.min_corner.x) + "\" y=\"" +
           num(sy(o.max_corner.y)) + "\" width=\"" + num(o.width()) +
           "\" height=\"" + num(o.height()) + "\" fill=\"#9aa0a6\"/>\n";
  }

  for (const Point2& p : cands.positions) {
    svg += "<circle class=\"candidate\" cx=\"" + num(p.x) + "\" cy=\"" +
           num(sy(p.y)) + "\" r=\"" + num(r_candidate) + "\" fill=\"#cfcfcf\"/>\n";
  }

  // Per-point coverage of the selected set, for sight-lines and styling.
  std::vector<double> point_coverage(inst.points.size(), 0.0);
  std::vector<std::vector<double>> columns;
  columns.reserve(rec.selected_positions.size());
  for (const Point2& guard : rec.selected_positions) {
    columns.push_back(coverage_column(s.world, guard, inst, s.sensor));
    for (std::size_t j = 0; j < inst.points.size(); ++j)
      point_coverage[j] += columns.back()[j];
  }

  for (std::size_t g = 0; g < rec.selected_positions.size(); ++g) {
    const Point2& guard = rec.selected_positions[g];
    for (std::size_t j = 0; j < inst.points.size(); ++j) {
      if (columns[g][j] <= 0.0) continue;
      svg += "<line class=\"sightline\" x1=\"" + num(guard.x) + "\" y1=\"" +
             num(sy(guard.y)) + "\" x2=\"" + num(inst.points[j].x) + "\" y2=\"" +
             num(sy(inst.points[j].y)) + "\" stroke=\"#7cb342\" stroke-width=\"" +
             num(0.0015 * dim) + "\"/>\n";
    }
  }

  if (inst.points.size() > 1) {
    svg += "<polyline class=\"route\" points=\"";
    for (std::size_t j = 0; j < inst.points.size(); ++j) {
      if (j) svg += " ";
      svg += num(inst.points[j].x) + "," + num(sy(inst.points[j].y));
    }
    svg += "\" fill=\"none\" stroke=\"#1565c0\" stroke-width=\"" +
           num(0.003 * dim) + "\"/>\n";
  }
  for (std::size_t j = 0; j < inst.points.size(); ++j) {
    const bool covered = point_coverage[j] > 0.0;
    svg += std::string("<circle class=\"") +
           (covered ? "route-point" : "route-point uncovered") + "\" cx=\"" +
           num(inst.points[j].x) + "\" cy=\"" + num(sy(inst.points[j].y)) +
           "\" r=\"" + num(r_route) + "\" fill=\"" +
           (covered ? "#1565c0" : "#d32f2f") + "\"/>\n";
  }

  for (const Point2& guard : rec.selected_positions) {
    svg += "<circle class=\"guard\" cx=\"" + num(guard.x) + "\" cy=\"" +
           num(sy(guard.y)) + "\" r=\"" + num(r_guard) +
           "\" fill=\"#ef6c00\" stroke=\"#000000\" stroke-width=\"" +
           num(0.002 * dim) + "\"/>\n";
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace parade
