#include "parade/candidates.hpp"

#include <random>
#include <stdexcept>

namespace parade {

namespace {

// Uniform double in [0,1) from the top 53 bits; identical on every platform,
// unlike std::uniform_real_distribution.
double next_unit(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

CandidateSet sample_candidates(const World& w, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("sample_candidates: n must be >= 1");
  w.validate();

  std::mt19937_64 gen(seed);
  CandidateSet set;
  set.seed = seed;
  set.positions.reserve(n);

  constexpr int kMaxRejections = 10000;
  int rejections = 0;
  while (set.positions.size() < n) {
    Point2 p{w.bounds.min_corner.x + next_unit(gen) * w.bounds.width(),
             w.bounds.min_corner.y + next_unit(gen) * w.bounds.height()};
    if (point_in_free_space(w, p)) {
      set.positions.push_back(p);
      rejections = 0;
    } else if (++rejections >= kMaxRejections) {
      throw std::runtime_error("sample_candidates: free space too small");
    }
  }
  return set;
}

}  // namespace parade
