#include "parade/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace parade {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kAngleTol = 1e-9;

double normalize_angle(double a) {
  a = std::remainder(a, kTwoPi);           // (-pi, pi]
  if (a >= std::numbers::pi) a -= kTwoPi;  // half-open [-pi, pi)
  return a;
}

double angular_distance(double a, double b) {
  return std::abs(std::remainder(a - b, kTwoPi));
}

double angle_to(const Point2& from, const Point2& to) {
  if (from == to) return 0.0;
  return normalize_angle(std::atan2(to.y - from.y, to.x - from.x));
}

}  // namespace

void SensorModel::validate() const {
  if (!(fov_deg > 0.0 && fov_deg <= 360.0))
    throw std::invalid_argument("sensor.fov_deg: must be in (0, 360]");
  if (max_range && !(*max_range > 0.0))
    throw std::invalid_argument("sensor.max_range: must be > 0 when set");
  if (attenuation == Attenuation::linear_decay && !max_range)
    throw std::invalid_argument("sensor: linear_decay requires a bounded max_range");
}

double SensorModel::fov_rad() const {
  return fov_deg * std::numbers::pi / 180.0;
}

bool visible(const World& w, const Point2& guard, const Point2& target,
             const SensorModel& model) {
  if (model.max_range && distance(guard, target) > *model.max_range) return false;
  return !segment_blocked(w, guard, target);
}

HeadingChoice best_heading(const std::vector<double>& angles, double fov) {
  if (angles.empty()) return {0.0, 0};
  fov = std::min(fov, kTwoPi);

  std::vector<double> sorted = angles;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t p = sorted.size();

  auto angle_at = [&](std::size_t idx) {
    return idx < p ? sorted[idx] : sorted[idx - p] + kTwoPi;
  };

  HeadingChoice best{0.0, 0};
  bool have_best = false;
  for (std::size_t i = 0; i < p; ++i) {
    // Widest window anchored at sorted[i].
    std::size_t j = i;
    while (j + 1 < i + p && angle_at(j + 1) - sorted[i] <= fov + kAngleTol) ++j;
    const std::size_t count = j - i + 1;
    const double span = angle_at(j) - sorted[i];
    const double heading = normalize_angle(sorted[i] + 0.5 * span);
    if (!have_best || count > best.covered ||
        (count == best.covered && heading < best.heading)) {
      best = {heading, count};
      have_best = true;
    }
  }
  return best;
}

std::vector<double> coverage_column(const World& w, const Point2& guard,
                                    const RouteInstance& inst,
                                    const SensorModel& model) {
  model.validate();
  const std::size_t m = inst.points.size();
  std::vector<double> column(m, 0.0);

  std::vector<bool> vis(m, false);
  std::vector<double> visible_angles;
  visible_angles.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    vis[j] = visible(w, guard, inst.points[j], model);
    if (vis[j]) visible_angles.push_back(angle_to(guard, inst.points[j]));
  }

  const double fov = model.fov_rad();
  double heading = 0.0;
  if (model.heading_policy == HeadingPolicy::sweep) {
    heading = best_heading(visible_angles, fov).heading;
  } else {
    Point2 mean{0.0, 0.0};
    for (const Point2& p : inst.points) {
      mean.x += p.x / static_cast<double>(m);
      mean.y += p.y / static_cast<double>(m);
    }
    heading = angle_to(guard, mean);
  }

  for (std::size_t j = 0; j < m; ++j) {
    if (!vis[j]) continue;
    const double a = angle_to(guard, inst.points[j]);
    if (angular_distance(a, heading) > 0.5 * fov + kAngleTol) continue;
    if (model.attenuation == Attenuation::binary) {
      column[j] = 1.0;
    } else {
      column[j] = std::max(0.0, 1.0 - distance(guard, inst.points[j]) / *model.max_range);
    }
  }
  return column;
}

CoverageMatrix build_coverage_matrix(const World& w, const CandidateSet& cands,
                                     const RouteInstance& inst,
                                     const SensorModel& model) {
  CoverageMatrix A(inst.points.size(), cands.positions.size());
  A.step_index = inst.step_index;
  for (std::size_t i = 0; i < cands.positions.size(); ++i) {
    const std::vector<double> col = coverage_column(w, cands.positions[i], inst, model);
    std::copy(col.begin(), col.end(), A.data.begin() + i * A.rows);
  }
  return A;
}

}  // namespace parade
