#include "parade/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace parade {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kReducedCostTol = 1e-9;
constexpr double kPivotTol = 1e-10;
constexpr double kDegenerateStep = 1e-11;
// Consecutive degenerate pivots tolerated under Dantzig pricing before
// switching to Bland's rule.
constexpr int kStallLimit = 50;

// Dense tableau simplex for: maximize c'z  s.t.  Ez = b,  l <= z <= u.
// Bounds may be infinite; a variable with l = -inf and u = +inf is handled
// as a free variable parked at zero while nonbasic.
class BoundedSimplex {
 public:
  enum class VarState : char { Basic, AtLower, AtUpper, FreeZero };
  enum class Outcome { Optimal, Unbounded };

  BoundedSimplex(std::size_t nrows, std::size_t ncols)
      : nrows_(nrows),
        ncols_(ncols),
        tab_(nrows * ncols, 0.0),
        rhs_(nrows, 0.0),
        lower_(ncols, 0.0),
        upper_(ncols, kInf),
        state_(ncols, VarState::AtLower),
        basis_(nrows, 0),
        basic_value_(nrows, 0.0),
        cost_(ncols, 0.0),
        reduced_(ncols, 0.0) {}

  double* row(std::size_t r) { return tab_.data() + r * ncols_; }
  const double* row(std::size_t r) const { return tab_.data() + r * ncols_; }

  void set_bounds(std::size_t j, double lo, double hi) {
    lower_[j] = lo;
    upper_[j] = hi;
  }
  void set_rhs(std::size_t r, double v) { rhs_[r] = v; }
  void set_state(std::size_t j, VarState s) { state_[j] = s; }
  void make_basic(std::size_t r, std::size_t j) {
    basis_[r] = j;
    state_[j] = VarState::Basic;
  }
  void set_cost(std::size_t j, double c) { cost_[j] = c; }

  // Basic values from the rhs minus nonbasic-at-bound contributions; the
  // initial basic columns must already form an identity in the tableau.
  void initialize_basic_values() {
    for (std::size_t r = 0; r < nrows_; ++r) basic_value_[r] = rhs_[r];
    for (std::size_t j = 0; j < ncols_; ++j) {
      const double v = nonbasic_value(j);
      if (state_[j] == VarState::Basic || v == 0.0) continue;
      for (std::size_t r = 0; r < nrows_; ++r) basic_value_[r] -= row(r)[j] * v;
    }
  }

  Outcome optimize() {
    compute_reduced_costs();
    int stalled = 0;
    bool bland = false;
    for (int iter = 0; iter < kIterationLimit; ++iter) {
      int dir = 0;
      const std::ptrdiff_t q = choose_entering(bland, dir);
      if (q < 0) return Outcome::Optimal;
      const double step = apply_step(static_cast<std::size_t>(q), dir);
      if (step == kInf) return Outcome::Unbounded;
      ++iterations_;
      if (step <= kDegenerateStep) {
        if (++stalled >= kStallLimit) bland = true;
      } else {
        stalled = 0;
        bland = false;
      }
    }
    throw std::runtime_error("simplex: iteration limit exceeded");
  }

  double value(std::size_t j) const {
    if (state_[j] == VarState::Basic) {
      for (std::size_t r = 0; r < nrows_; ++r)
        if (basis_[r] == j) return basic_value_[r];
    }
    return nonbasic_value(j);
  }

  // Fix variable j at zero (used to retire the phase-1 artificial). If it is
  // basic, pivot it out on any admissible column.
  void fix_at_zero(std::size_t j) {
    lower_[j] = 0.0;
    upper_[j] = 0.0;
    if (state_[j] != VarState::Basic) {
      state_[j] = VarState::AtLower;
      return;
    }
    for (std::size_t r = 0; r < nrows_; ++r) {
      if (basis_[r] != j) continue;
      for (std::size_t k = 0; k < ncols_; ++k) {
        if (k == j || state_[k] == VarState::Basic) continue;
        if (std::abs(row(r)[k]) > 1e-7) {
          pivot(r, k, nonbasic_value(k));
          state_[j] = VarState::AtLower;
          return;
        }
      }
      return;  // redundant row; stays basic, pinned by the zero bounds
    }
  }

  int iterations() const { return iterations_; }

 private:
  static constexpr int kIterationLimit = 200000;

  double nonbasic_value(std::size_t j) const {
    switch (state_[j]) {
      case VarState::AtLower: return lower_[j];
      case VarState::AtUpper: return upper_[j];
      default: return 0.0;
    }
  }

  void compute_reduced_costs() {
    std::fill(reduced_.begin(), reduced_.end(), 0.0);
    for (std::size_t j = 0; j < ncols_; ++j) reduced_[j] = cost_[j];
    for (std::size_t r = 0; r < nrows_; ++r) {
      const double cb = cost_[basis_[r]];
      if (cb == 0.0) continue;
      const double* tr = row(r);
      for (std::size_t j = 0; j < ncols_; ++j) reduced_[j] -= cb * tr[j];
    }
  }

  // Entering column and its improving direction, or -1 at optimality.
  std::ptrdiff_t choose_entering(bool bland, int& dir) const {
    std::ptrdiff_t best = -1;
    double best_viol = kReducedCostTol;
    for (std::size_t j = 0; j < ncols_; ++j) {
      const VarState s = state_[j];
      if (s == VarState::Basic) continue;
      int d = 0;
      if (reduced_[j] > kReducedCostTol &&
          (s == VarState::AtLower || s == VarState::FreeZero)) {
        d = +1;
      } else if (reduced_[j] < -kReducedCostTol &&
                 (s == VarState::AtUpper || s == VarState::FreeZero)) {
        d = -1;
      } else {
        continue;
      }
      if (bland) {
        dir = d;
        return static_cast<std::ptrdiff_t>(j);
      }
      const double viol = std::abs(reduced_[j]);
      if (viol > best_viol) {
        best_viol = viol;
        best = static_cast<std::ptrdiff_t>(j);
        dir = d;
      }
    }
    return best;
  }

  // Ratio test plus update; returns the step taken, or kInf if unbounded.
  double apply_step(std::size_t q, int dir) {
    double limit = kInf;
    std::ptrdiff_t leave_row = -1;
    bool leave_at_upper = false;
    double leave_pivot = 0.0;

    for (std::size_t r = 0; r < nrows_; ++r) {
      const double coef = row(r)[q];
      if (std::abs(coef) <= kPivotTol) continue;
      const double rate = -dir * coef;  // d(basic_value)/d(step)
      const std::size_t bvar = basis_[r];
      double cap;
      bool hits_upper;
      if (rate < 0.0) {
        if (lower_[bvar] == -kInf) continue;
        cap = (basic_value_[r] - lower_[bvar]) / (-rate);
        hits_upper = false;
      } else {
        if (upper_[bvar] == kInf) continue;
        cap = (upper_[bvar] - basic_value_[r]) / rate;
        hits_upper = true;
      }
      cap = std::max(cap, 0.0);
      const bool better =
          cap < limit - 1e-12 ||
          (cap < limit + 1e-12 &&
           (leave_row < 0 || std::abs(coef) > std::abs(leave_pivot) + 1e-12 ||
            (std::abs(coef) > std::abs(leave_pivot) - 1e-12 &&
             bvar < basis_[static_cast<std::size_t>(leave_row)])));
      if (better) {
        limit = std::min(limit, cap);
        leave_row = static_cast<std::ptrdiff_t>(r);
        leave_at_upper = hits_upper;
        leave_pivot = coef;
      }
    }

    const double own_range = (lower_[q] > -kInf && upper_[q] < kInf)
                                 ? upper_[q] - lower_[q]
                                 : kInf;
    if (own_range <= limit) {
      if (own_range == kInf) return kInf;
      // Bound flip; basis unchanged.
      for (std::size_t r = 0; r < nrows_; ++r)
        basic_value_[r] -= dir * row(r)[q] * own_range;
      state_[q] = (state_[q] == VarState::AtLower) ? VarState::AtUpper
                                                   : VarState::AtLower;
      return own_range;
    }
    if (leave_row < 0) return kInf;

    const double entering_value = nonbasic_value(q) + dir * limit;
    for (std::size_t r = 0; r < nrows_; ++r)
      basic_value_[r] -= dir * row(r)[q] * limit;
    const std::size_t lr = static_cast<std::size_t>(leave_row);
    const std::size_t leaving = basis_[lr];
    state_[leaving] = leave_at_upper ? VarState::AtUpper : VarState::AtLower;
    pivot(lr, q, entering_value);
    return limit;
  }

  void pivot(std::size_t r, std::size_t q, double entering_value) {
    double* pr = row(r);
    const double piv = pr[q];
    const double inv = 1.0 / piv;
    for (std::size_t j = 0; j < ncols_; ++j) pr[j] *= inv;
    pr[q] = 1.0;
    for (std::size_t r2 = 0; r2 < nrows_; ++r2) {
      if (r2 == r) continue;
      double* p2 = row(r2);
      const double f = p2[q];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < ncols_; ++j) p2[j] -= f * pr[j];
      p2[q] = 0.0;
    }
    const double fr = reduced_[q];
    if (fr != 0.0) {
      for (std::size_t j = 0; j < ncols_; ++j) reduced_[j] -= fr * pr[j];
      reduced_[q] = 0.0;
    }
    basis_[r] = q;
    state_[q] = VarState::Basic;
    basic_value_[r] = entering_value;
  }

  std::size_t nrows_, ncols_;
  std::vector<double> tab_;
  std::vector<double> rhs_;
  std::vector<double> lower_, upper_;
  std::vector<VarState> state_;
  std::vector<std::size_t> basis_;
  std::vector<double> basic_value_;
  std::vector<double> cost_;
  std::vector<double> reduced_;
  int iterations_ = 0;
};

}  // namespace

RelaxedSolution solve_relaxation(const RelaxedProblem& p) {
  const CoverageMatrix& A = p.coverage;
  const std::size_t m = A.rows;
  const std::size_t n = A.cols;
  if (m == 0 || n == 0)
    throw std::invalid_argument("solve_relaxation: empty coverage matrix");
  if (p.team_size < 1)
    throw std::invalid_argument("solve_relaxation: team_size must be >= 1");
  for (double a : A.data) {
    if (!std::isfinite(a) || std::abs(a) > 1e12)
      throw std::invalid_argument("solve_relaxation: coverage entry non-finite or > 1e12");
  }
  if (!p.weights.empty() && p.weights.size() != n)
    throw std::invalid_argument("solve_relaxation: weight vector length mismatch");
  bool zero_weights = true;
  for (double w : p.weights) {
    if (!std::isfinite(w) || w < 0.0)
      throw std::invalid_argument("solve_relaxation: weights must be finite and >= 0");
    if (w != 0.0) zero_weights = false;
  }

  RelaxedSolution sol;
  if (p.team_size > n) {
    sol.status = LpStatus::infeasible;
    return sol;
  }

  // Variable layout: [x_0..x_{n-1}, t, s_0..s_{m-1}, artificial].
  const std::size_t var_t = n;
  const std::size_t var_slack = n + 1;
  const std::size_t var_art = n + 1 + m;
  const std::size_t ncols = n + m + 2;
  const std::size_t nrows = m + 1;

  BoundedSimplex sx(nrows, ncols);
  for (std::size_t j = 0; j < m; ++j) {
    double* r = sx.row(j);
    for (std::size_t i = 0; i < n; ++i) r[i] = -A.at(j, i);
    r[var_t] = 1.0;
    r[var_slack + j] = 1.0;
    sx.set_rhs(j, 0.0);
    sx.make_basic(j, var_slack + j);
  }
  {
    double* r = sx.row(m);
    for (std::size_t i = 0; i < n; ++i) r[i] = 1.0;
    r[var_art] = 1.0;
    sx.set_rhs(m, static_cast<double>(p.team_size));
    sx.make_basic(m, var_art);
  }
  for (std::size_t i = 0; i < n; ++i) sx.set_bounds(i, 0.0, 1.0);
  sx.set_bounds(var_t, -kInf, kInf);
  sx.set_state(var_t, BoundedSimplex::VarState::FreeZero);

  // Phase-2 objective coefficients for the x block, shared by the crash
  // basis below and the phase-2 cost row.
  const bool tiebreak = zero_weights && p.tiebreak_eps != 0.0;
  std::vector<double> xcost(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double c = p.weights.empty() ? 0.0 : -p.weights[i];
    if (tiebreak) {
      double colsum = 0.0;
      for (std::size_t j = 0; j < m; ++j) colsum += A.at(j, i);
      c += p.tiebreak_eps * colsum;
    }
    xcost[i] = c;
  }

  // Crash start: park the S most attractive columns at their upper bound so
  // the equality row is already satisfied and phase 2 begins near a good
  // vertex. Ties break toward the lower index for determinism.
  {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return xcost[a] > xcost[b]; });
    for (std::size_t r = 0; r < p.team_size; ++r)
      sx.set_state(order[r], BoundedSimplex::VarState::AtUpper);
  }
  sx.initialize_basic_values();

  // Phase 1: drive the artificial to zero.
  sx.set_cost(var_art, -1.0);
  if (sx.optimize() != BoundedSimplex::Outcome::Optimal ||
      std::abs(sx.value(var_art)) > 1e-7) {
    sol.status = LpStatus::infeasible;
    sol.simplex_iterations = sx.iterations();
    return sol;
  }
  sx.fix_at_zero(var_art);

  // Phase 2: the relaxed max-min objective.
  sx.set_cost(var_art, 0.0);
  for (std::size_t i = 0; i < n; ++i) sx.set_cost(i, xcost[i]);
  sx.set_cost(var_t, 1.0);
  if (sx.optimize() != BoundedSimplex::Outcome::Optimal) {
    sol.status = LpStatus::unbounded_guard;
    sol.simplex_iterations = sx.iterations();
    return sol;
  }

  sol.status = LpStatus::optimal;
  sol.simplex_iterations = sx.iterations();
  sol.x.resize(n);
  for (std::size_t i = 0; i < n; ++i) sol.x[i] = sx.value(i);
  sol.t = sx.value(var_t);
  sol.objective = sol.t;
  for (std::size_t i = 0; i < p.weights.size(); ++i)
    sol.objective -= p.weights[i] * sol.x[i];
  return sol;
}

}  // namespace parade
