#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "parade/candidates.hpp"
#include "parade/geometry.hpp"
#include "parade/route.hpp"

namespace parade {

enum class Attenuation { binary, linear_decay };
enum class HeadingPolicy { sweep, centroid };

struct SensorModel {
  double fov_deg = 360.0;
  std::optional<double> max_range;  // unbounded when absent
  Attenuation attenuation = Attenuation::binary;
  HeadingPolicy heading_policy = HeadingPolicy::sweep;

  void validate() const;
  double fov_rad() const;
};

// Column-major m x n coverage matrix; column i is the coverage vector of
// candidate position i over the m route points.
struct CoverageMatrix {
  std::size_t rows = 0;  // m route points
  std::size_t cols = 0;  // n candidate positions
  std::vector<double> data;  // column-major, rows*cols
  std::size_t step_index = 0;

  CoverageMatrix() = default;
  CoverageMatrix(std::size_t m, std::size_t n)
      : rows(m), cols(n), data(m * n, 0.0) {}

  double at(std::size_t row, std::size_t col) const {
    return data[col * rows + row];
  }
  double& at(std::size_t row, std::size_t col) {
    return data[col * rows + row];
  }
};

// Occlusion and range test; FOV is applied later via the heading choice.
bool visible(const World& w, const Point2& guard, const Point2& target,
             const SensorModel& model);

struct HeadingChoice {
  double heading = 0.0;      // radians in [-pi, pi)
  std::size_t covered = 0;   // angles inside the best FOV window
};

// Heading whose symmetric window of width fov (circular, endpoint-inclusive
// with 1e-9 rad slack) contains the most input angles. Among maximal
// windows the smallest heading in [-pi, pi) wins.
HeadingChoice best_heading(const std::vector<double>& angles, double fov);

std::vector<double> coverage_column(const World& w, const Point2& guard,
                                    const RouteInstance& inst,
                                    const SensorModel& model);

CoverageMatrix build_coverage_matrix(const World& w, const CandidateSet& cands,
                                     const RouteInstance& inst,
                                     const SensorModel& model);

}  // namespace parade
