#include "parade/oracle.hpp"

#include <algorithm>
#include <limits>

namespace parade {

namespace {

// C(n, k) saturating at limit+1 to avoid overflow.
std::uint64_t choose_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    if (result > cap / (n - k + i)) return cap + 1;
    result = result * (n - k + i) / i;
    if (result > cap) return cap + 1;
  }
  return result;
}

}  // namespace

OracleResult brute_force(const CoverageMatrix& A, std::size_t team_size,
                         std::uint64_t limit) {
  const std::size_t n = A.cols;
  const std::size_t m = A.rows;
  if (team_size < 1 || team_size > n)
    throw std::invalid_argument("brute_force: team_size out of [1, n]");
  if (choose_capped(n, team_size, limit) > limit)
    throw OracleLimitError("brute_force: C(n,S) exceeds the enumeration limit");

  OracleResult result;
  result.best_value = -std::numeric_limits<double>::infinity();

  std::vector<std::size_t> subset(team_size);
  // Partial column sums per combination-tree depth.
  std::vector<std::vector<double>> sums(team_size + 1, std::vector<double>(m, 0.0));

  // Lexicographic enumeration; strict improvement keeps the first (smallest)
  // argmax subset.
  auto recurse = [&](auto&& self, std::size_t depth, std::size_t first) -> void {
    if (depth == team_size) {
      ++result.subsets_evaluated;
      const auto& total = sums[depth];
      const double value = *std::min_element(total.begin(), total.end());
      if (value > result.best_value) {
        result.best_value = value;
        result.best_subset = subset;
      }
      return;
    }
    const std::size_t remaining = team_size - depth - 1;
    for (std::size_t i = first; i + remaining < n; ++i) {
      subset[depth] = i;
      for (std::size_t j = 0; j < m; ++j)
        sums[depth + 1][j] = sums[depth][j] + A.at(j, i);
      self(self, depth + 1, i + 1);
    }
  };
  recurse(recurse, 0, 0);
  return result;
}

}  // namespace parade
