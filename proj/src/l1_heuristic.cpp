#include "parade/l1_heuristic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace parade {

namespace {

// Top-S entries of x, ties broken toward the lower index; returned ascending.
std::vector<std::size_t> top_indices(const std::vector<double>& x, std::size_t S) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] > x[b]; });
  order.resize(S);
  std::sort(order.begin(), order.end());
  return order;
}

double min_coverage(const CoverageMatrix& A, const std::vector<std::size_t>& sel) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < A.rows; ++j) {
    double total = 0.0;
    for (std::size_t i : sel) total += A.at(j, i);
    best = std::min(best, total);
  }
  return best;
}

}  // namespace

void HeuristicConfig::validate() const {
  if (!(alpha > 0.0 && tau > 0.0 && bool_tol > 0.0 && max_iters > 0))
    throw std::invalid_argument("heuristic: alpha, tau, bool_tol, max_iters must be positive");
  if (!(bool_tol < 0.5))
    throw std::invalid_argument("heuristic.bool_tol: must be < 0.5");
}

PlacementSolution recover_boolean(const CoverageMatrix& A, std::size_t team_size,
                                  const HeuristicConfig& cfg) {
  cfg.validate();
  if (team_size > A.cols)
    throw std::invalid_argument("recover_boolean: team_size exceeds candidate count");

  PlacementSolution out;
  std::vector<double> weights;  // empty = all-zero first iterate
  std::vector<std::vector<double>> history;
  for (int iter = 1; iter <= cfg.max_iters; ++iter) {
    RelaxedSolution lp = solve_relaxation({A, team_size, weights});
    if (lp.status != LpStatus::optimal)
      throw std::runtime_error("recover_boolean: relaxation not optimal");
    out.x = std::move(lp.x);
    out.iterations = iter;

    double worst = 0.0;
    for (double xi : out.x)
      worst = std::max(worst, std::min(std::abs(xi), std::abs(1.0 - xi)));
    if (worst <= cfg.bool_tol) {
      out.converged = true;
      break;
    }
    // The weight update and the solve are both deterministic functions of
    // the iterate, so a bit-identical repeat of any earlier x proves the
    // sequence has entered a cycle that can never become Boolean. Stop and
    // take the rounding fallback instead of spinning out the budget.
    if (std::find(history.begin(), history.end(), out.x) != history.end()) break;
    history.push_back(out.x);
    weights.resize(out.x.size());
    for (std::size_t i = 0; i < out.x.size(); ++i)
      weights[i] = cfg.alpha / (cfg.tau + out.x[i]);
  }

  out.rounded = !out.converged;
  out.selected = top_indices(out.x, team_size);
  out.t_boolean = min_coverage(A, out.selected);
  return out;
}

double cardinality_residual(const std::vector<double>& x) {
  double total = 0.0;
  for (double xi : x) total += std::min(xi, 1.0 - xi);
  return total;
}

}  // namespace parade
