#pragma once

#include <cstdint>
#include <vector>

#include "parade/geometry.hpp"

namespace parade {

enum class ResampleMode { fixed, per_iteration };

struct CandidateSet {
  std::vector<Point2> positions;
  std::uint64_t seed = 0;
  ResampleMode resample_mode = ResampleMode::fixed;
};

// n i.i.d.-uniform points over the free region, by rejection sampling from
// the bounding rectangle. Deterministic for a given (world, n, seed); a
// prefix of the stream for seed s is shared by all n.
// Throws std::runtime_error after 10,000 consecutive rejections.
CandidateSet sample_candidates(const World& w, std::size_t n, std::uint64_t seed);

}  // namespace parade
