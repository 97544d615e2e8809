#include "funbox/random.hpp"

#include <algorithm>
#include <numeric>

namespace funbox {

IntervalRep random_interval_rep(std::size_t n, std::uint64_t seed, std::uint64_t coord_range) {
  if (n < 1) throw InvalidArgument("random_interval_rep needs n >= 1");
  if (coord_range < 2) throw InvalidArgument("random_interval_rep needs coord_range >= 2");
  SplitMix64 rng(seed);
  IntervalRep rep;
  rep.intervals.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = static_cast<std::int64_t>(rng.below(coord_range));
    const auto b = static_cast<std::int64_t>(rng.below(coord_range));
    rep.intervals.push_back({std::min(a, b), std::max(a, b)});
  }
  return rep;
}

Graph random_graph(std::size_t n, std::uint64_t num, std::uint64_t den, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("random_graph needs n >= 1");
  if (den == 0 || num > den) throw InvalidArgument("edge probability must be num/den in [0, 1]");
  SplitMix64 rng(seed);
  GraphBuilder b(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (rng.below(den) < num) b.add_edge(u, v);
  return std::move(b).build();
}

std::vector<std::size_t> random_permutation(std::size_t n, SplitMix64& rng) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
  return p;
}

Graph random_threshold_graph(std::size_t n, SplitMix64& rng) {
  const auto ids = random_permutation(n, rng);
  GraphBuilder b(n);
  for (std::size_t step = 1; step < n; ++step) {
    if (rng.below(2) == 0) continue;  // isolated at insertion time
    for (std::size_t prev = 0; prev < step; ++prev) b.add_edge(static_cast<VertexId>(ids[step]), static_cast<VertexId>(ids[prev]));
  }
  return std::move(b).build();
}

}  // namespace funbox
