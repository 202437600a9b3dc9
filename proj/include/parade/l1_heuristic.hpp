#pragma once

#include <cstddef>
#include <vector>

#include "parade/coverage.hpp"
#include "parade/lp.hpp"

namespace parade {

struct HeuristicConfig {
  double alpha = 1.0;
  double tau = 1e-4;
  double bool_tol = 1e-4;
  int max_iters = 50;

  void validate() const;
};

struct PlacementSolution {
  std::vector<std::size_t> selected;  // S candidate indices, ascending
  std::vector<double> x;              // final relaxed vector
  double t_boolean = 0.0;             // min route-point coverage of the Boolean pick
  int iterations = 0;                 // LP solves performed
  bool converged = false;
  bool rounded = false;
};

// Iterated weighted l1 recovery: alternate the relaxed LP with the weight
// update w_i = alpha / (tau + x_i) until x is Boolean within bool_tol, then
// threshold at 0.5. Falls back to top-S rounding after max_iters.
PlacementSolution recover_boolean(const CoverageMatrix& A, std::size_t team_size,
                                  const HeuristicConfig& cfg = {});

// Sum_i min(x_i, 1 - x_i); zero iff x is Boolean.
double cardinality_residual(const std::vector<double>& x);

}  // namespace parade
