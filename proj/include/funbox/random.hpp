#pragma once

// Seeded generators for campaigns. The stream is splitmix64 so campaign inputs
// can be regenerated bit-for-bit from (seed, instance index) in any language.

#include <cstdint>
#include <vector>

#include "funbox/graph.hpp"
#include "funbox/interval.hpp"

namespace funbox {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  /// next() mod bound; bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
  /// Uniform in [lo, hi] via below().
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::uint64_t state_;
};

/// Seed of instance `index` in a campaign seeded with `seed`.
inline std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(seed ^ (index * 0xD1B54A32D192ED03ULL)).next();
}

/// n intervals; each endpoint pair is two draws below coord_range, sorted.
IntervalRep random_interval_rep(std::size_t n, std::uint64_t seed, std::uint64_t coord_range);

/// Each pair u < v (lexicographic) is an edge iff below(den) < num.
Graph random_graph(std::size_t n, std::uint64_t num, std::uint64_t den, std::uint64_t seed);

/// Fisher-Yates from the back, 0-based.
std::vector<std::size_t> random_permutation(std::size_t n, SplitMix64& rng);

/// Adds vertices one at a time as isolated or dominating, then shuffles ids.
Graph random_threshold_graph(std::size_t n, SplitMix64& rng);

}  // namespace funbox
