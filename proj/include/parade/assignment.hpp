#pragma once

#include <cstddef>
#include <vector>

#include "parade/geometry.hpp"

namespace parade {

struct TeamState {
  std::vector<Point2> robot_positions;
  std::size_t step_index = 0;
};

struct Assignment {
  std::vector<std::size_t> robot_to_target;  // bijection over S elements
  double total_distance = 0.0;
};

// Greedy global matching: repeatedly pair the unmatched (robot, target) with
// minimum straight-line distance; ties prefer the lower robot index, then
// the lower target index.
Assignment nearest_neighbor_assign(const TeamState& current,
                                   const std::vector<Point2>& targets);

}  // namespace parade
