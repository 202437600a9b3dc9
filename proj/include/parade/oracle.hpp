#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "parade/coverage.hpp"

namespace parade {

struct OracleLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  std::vector<std::size_t> best_subset;  // lexicographically smallest argmax
  double best_value = 0.0;
  std::uint64_t subsets_evaluated = 0;
};

// Exact max-min optimum by enumerating every S-subset of candidate columns.
// Refuses with OracleLimitError when C(n, S) exceeds limit.
OracleResult brute_force(const CoverageMatrix& A, std::size_t team_size,
                         std::uint64_t limit = 2'000'000);

}  // namespace parade
