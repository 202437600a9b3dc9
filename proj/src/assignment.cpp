#include "parade/assignment.hpp"

#include <limits>
#include <stdexcept>

namespace parade {

Assignment nearest_neighbor_assign(const TeamState& current,
                                   const std::vector<Point2>& targets) {
  const std::size_t S = current.robot_positions.size();
  if (targets.size() != S)
    throw std::invalid_argument("nearest_neighbor_assign: robot/target count mismatch");

  Assignment out;
  out.robot_to_target.assign(S, S);
  std::vector<bool> robot_done(S, false), target_done(S, false);

  for (std::size_t round = 0; round < S; ++round) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t br = S, bt = S;
    for (std::size_t r = 0; r < S; ++r) {
      if (robot_done[r]) continue;
      for (std::size_t t = 0; t < S; ++t) {
        if (target_done[t]) continue;
        const double d = distance(current.robot_positions[r], targets[t]);
        if (d < best) {
          best = d;
          br = r;
          bt = t;
        }
      }
    }
    robot_done[br] = true;
    target_done[bt] = true;
    out.robot_to_target[br] = bt;
    out.total_distance += best;
  }
  return out;
}

}  // namespace parade
