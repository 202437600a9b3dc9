#include "parade/simulator.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include "parade/scenario_io.hpp"

namespace parade {

void Scenario::validate() const {
  world.validate();
  sensor.validate();
  heuristic.validate();
  schedule.validate(path.total_arclength());
  if (team_size < 1) throw std::invalid_argument("scenario.team_size: must be >= 1");
  if (candidate_count < 1)
    throw std::invalid_argument("scenario.candidate_count: must be >= 1");
  if (team_size > candidate_count)
    throw std::invalid_argument("scenario.team_size: exceeds candidate_count");
  for (std::size_t i = 0; i < path.waypoints.size(); ++i) {
    if (!point_in_free_space(world, path.waypoints[i]))
      throw std::invalid_argument("scenario.route.waypoints[" + std::to_string(i) +
                                  "]: not in free space");
  }
}

namespace {

StepRecord make_record(const CoverageMatrix& A, const PlacementSolution& place,
                       const CandidateSet& cands, double solve_seconds) {
  StepRecord rec;
  rec.step_index = A.step_index;
  rec.selected = place.selected;
  for (std::size_t i : place.selected) rec.selected_positions.push_back(cands.positions[i]);
  rec.heuristic_iterations = place.iterations;
  rec.converged = place.converged;
  rec.rounded = place.rounded;
  rec.solve_seconds = solve_seconds;

  // Recompute per-point coverage of the Boolean pick from A directly.
  rec.t_boolean = std::numeric_limits<double>::infinity();
  std::map<double, std::size_t> histogram;
  for (std::size_t j = 0; j < A.rows; ++j) {
    double total = 0.0;
    for (std::size_t i : place.selected) total += A.at(j, i);
    ++histogram[total];
    if (total < rec.t_boolean) {
      rec.t_boolean = total;
      rec.min_coverage_point_index = j;
    }
  }
  rec.coverage_histogram.assign(histogram.begin(), histogram.end());
  return rec;
}

}  // namespace

RunResult run(const Scenario& s, const StepObserver& observer) {
  s.validate();

  RunResult result;
  result.scenario_digest = scenario_digest(s);

  CandidateSet fixed_set;
  if (s.resample_mode == ResampleMode::fixed)
    fixed_set = sample_candidates(s.world, s.candidate_count, s.seed);

  std::vector<Point2> robot_positions;  // previous step's placement
  for (std::size_t k = 0; k < s.schedule.step_count; ++k) {
    try {
      const RouteInstance inst = route_instance(s.path, s.schedule, k);
      const CandidateSet& cands =
          (s.resample_mode == ResampleMode::fixed)
              ? fixed_set
              : (fixed_set = sample_candidates(s.world, s.candidate_count, s.seed + k),
                 fixed_set);
      const CoverageMatrix A = build_coverage_matrix(s.world, cands, inst, s.sensor);

      const auto start = std::chrono::steady_clock::now();
      const PlacementSolution place = recover_boolean(A, s.team_size, s.heuristic);
      const std::chrono::duration<double> elapsed =
          std::chrono::steady_clock::now() - start;

      StepRecord rec = make_record(A, place, cands, elapsed.count());

      if (k == 0) {
        // No prior deployment: robots start at the first placement.
        rec.robot_positions = rec.selected_positions;
        rec.robot_to_target.resize(s.team_size);
        for (std::size_t r = 0; r < s.team_size; ++r) rec.robot_to_target[r] = r;
        rec.assignment_distance = 0.0;
      } else {
        const Assignment asg = nearest_neighbor_assign(
            TeamState{robot_positions, k - 1}, rec.selected_positions);
        rec.robot_to_target = asg.robot_to_target;
        rec.assignment_distance = asg.total_distance;
        rec.robot_positions.resize(s.team_size);
        for (std::size_t r = 0; r < s.team_size; ++r)
          rec.robot_positions[r] = rec.selected_positions[asg.robot_to_target[r]];
      }
      robot_positions = rec.robot_positions;

      if (observer) observer(rec, inst, cands);
      result.steps.push_back(std::move(rec));
    } catch (const std::exception& e) {
      throw std::runtime_error("run: step " + std::to_string(k) + ": " + e.what());
    }
  }

  for (const StepRecord& rec : result.steps) {
    result.mean_solve_seconds += rec.solve_seconds / static_cast<double>(result.steps.size());
    result.max_solve_seconds = std::max(result.max_solve_seconds, rec.solve_seconds);
    result.mean_t_boolean += rec.t_boolean / static_cast<double>(result.steps.size());
  }
  return result;
}

}  // namespace parade
