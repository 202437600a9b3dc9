#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "parade/assignment.hpp"
#include "parade/candidates.hpp"
#include "parade/coverage.hpp"
#include "parade/geometry.hpp"
#include "parade/l1_heuristic.hpp"
#include "parade/route.hpp"

namespace parade {

struct Scenario {
  std::string name;
  World world;
  RoutePath path;
  ParadeSchedule schedule;
  std::size_t team_size = 1;
  SensorModel sensor;
  std::size_t candidate_count = 1;
  std::uint64_t seed = 0;
  ResampleMode resample_mode = ResampleMode::fixed;
  HeuristicConfig heuristic;
  std::optional<double> sampling_period;  // T_s, metadata only

  void validate() const;
};

struct StepRecord {
  std::size_t step_index = 0;
  std::vector<std::size_t> selected;       // candidate indices, ascending
  std::vector<Point2> selected_positions;  // same order as selected
  std::vector<Point2> robot_positions;     // per robot after assignment
  std::vector<std::size_t> robot_to_target;
  double assignment_distance = 0.0;
  double t_boolean = 0.0;
  std::size_t min_coverage_point_index = 0;
  int heuristic_iterations = 0;
  bool converged = false;
  bool rounded = false;
  double solve_seconds = 0.0;  // relaxation + recovery only
  // (coverage value, route point count) pairs, ascending by value.
  std::vector<std::pair<double, std::size_t>> coverage_histogram;
};

struct RunResult {
  std::vector<StepRecord> steps;
  std::string scenario_digest;
  double mean_solve_seconds = 0.0;
  double max_solve_seconds = 0.0;
  double mean_t_boolean = 0.0;
};

// Called after each step with the record and the inputs that produced it.
using StepObserver = std::function<void(const StepRecord&, const RouteInstance&,
                                        const CandidateSet&)>;

// Per-step loop: route instance -> candidates -> coverage matrix ->
// relaxation + l1 recovery -> nearest-neighbor assignment. Deterministic up
// to the solve_seconds fields.
RunResult run(const Scenario& s, const StepObserver& observer = nullptr);

}  // namespace parade
