#pragma once

// Word-level kernels for graphs of at most 64 vertices. Each vertex subset is a
// single 64-bit mask, so induced subgraphs are never materialized.
//
// The graph-level sweeps come in two flavours: a serial reference kept for
// testing and an OpenMP version that fans the subset range out over threads.
// Both return identical values for every input.

#include <array>
#include <cstdint>
#include <vector>

#include "funbox/graph.hpp"

namespace funbox::kernels {

inline constexpr std::size_t kMaxVertices = 64;

inline constexpr std::uint64_t bit(std::size_t v) { return std::uint64_t{1} << v; }
inline constexpr std::uint64_t full_mask(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : bit(n) - 1; }

struct MaskGraph {
  std::size_t n = 0;
  std::array<std::uint64_t, kMaxVertices> rows{};

  /// Throws SizeLimitError for graphs above 64 vertices.
  static MaskGraph from(const Graph& g);
};

/// Vertices of `within` that disagree on x and y, excluding x and y themselves.
inline std::uint64_t distinguishers(const MaskGraph& g, std::uint64_t within, std::size_t x, std::size_t y) {
  return (g.rows[x] ^ g.rows[y]) & within & ~bit(x) & ~bit(y);
}

/// Requirement sets whose hitting sets are exactly the argument sets S for
/// which y is a function of S inside the subgraph induced by `within`.
std::vector<std::uint64_t> conflict_sets(const MaskGraph& g, std::uint64_t within, std::size_t y);

/// Exact functionality of y in the subgraph induced by `within`.
int fun_within(const MaskGraph& g, std::uint64_t within, std::size_t y);

/// Minimum over distinct pairs of the symmetric difference inside `within`,
/// stopping as soon as the running minimum drops to `floor` or below.
int min_pair_sd(const MaskGraph& g, std::uint64_t within, int floor);

int sd_graph_serial(const MaskGraph& g);
int sd_graph_parallel(const MaskGraph& g);
int fun_graph_serial(const MaskGraph& g);
int fun_graph_parallel(const MaskGraph& g);

}  // namespace funbox::kernels
