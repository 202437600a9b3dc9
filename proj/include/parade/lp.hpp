#pragma once

#include <cstddef>
#include <vector>

#include "parade/coverage.hpp"

namespace parade {

// max t - w'x + tiebreak_eps * 1'Ax   s.t.  t <= Ax, 0 <= x <= 1, 1'x = S.
// The tiebreak term is applied only when w is all-zero; it resolves the
// massive degeneracy of the first heuristic iterate when some route point
// is invisible to every candidate.
struct RelaxedProblem {
  const CoverageMatrix& coverage;
  std::size_t team_size = 1;
  std::vector<double> weights;  // empty means all-zero
  double tiebreak_eps = 1e-6;
};

enum class LpStatus { optimal, infeasible, unbounded_guard };

struct RelaxedSolution {
  std::vector<double> x;
  double t = 0.0;
  double objective = 0.0;  // t - w'x at the returned point
  LpStatus status = LpStatus::infeasible;
  int simplex_iterations = 0;
};

// Dense two-phase bounded-variable simplex returning a vertex optimum.
RelaxedSolution solve_relaxation(const RelaxedProblem& p);

}  // namespace parade
