#pragma once

// Generators for the extremal families: half graphs, ABC graphs, the
// high-symmetric-difference graphs G_k and their ABC extension, the recursive
// point-box incidence graphs H^n_i, and hypercubes.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "funbox/graph.hpp"

namespace funbox {

enum class Family { half, abc, gk, hni, hypercube };
enum class Part { x, y, a, b, c, point, box, cube };

std::string_view to_string(Family f);
Family family_from_string(std::string_view s);

struct VertexLabel {
  Part part = Part::x;
  /// 1-based position in the part's order (the A-B order for B vertices of ABC graphs).
  std::size_t order = 0;
  /// ABC graphs: 1-based position of a B vertex in the B-C order.
  std::size_t order2 = 0;
  /// G_k B vertices: coordinates (b_x, b_y) and the block indices (i, j, p, q).
  std::int64_t bx = 0;
  std::int64_t by = 0;
  std::array<int, 4> block{};
  /// Hypercube vertices: bitstring, most significant coordinate first.
  std::string bits;
  /// Vertex added by extend_gk_to_abc.
  bool added = false;
};

struct ConstructionLabels {
  Family family = Family::half;
  std::vector<VertexLabel> vertices;

  /// One opaque string per vertex, as stored under "labels" in graph files.
  std::vector<std::string> to_strings() const;
  VertexSet part(Part p) const;
};

struct Construction {
  Graph graph;  ///< carries ConstructionLabels::to_strings() as its labels
  ConstructionLabels labels;
};

/// Parts X = {x_1..x_n} (ids 0..n-1) and Y (ids n..2n-1), x_i ~ y_j iff i < j.
Construction half_graph(std::size_t n);

/// A = ids 0..n-1, B = n..2n-1, C = 2n..3n-1. a_i ~ b_j iff i < j, and with
/// b'_i = b_{perm[i]} (0-based permutation), b'_i ~ c_j iff i < j.
Construction abc_graph(std::size_t n, std::span<const std::size_t> perm);
std::vector<std::size_t> identity_permutation(std::size_t n);

/// B_11 = {(pk - q, qk + p) : 1 <= p <= k, 0 <= q <= k-1}, in (p, q) order.
std::vector<std::pair<std::int64_t, std::int64_t>> gk_base_block(std::size_t k);

/// G_k: cliques A, C of size k^3 and B of size k^4 on translated copies of B_11.
/// Ids: A in order, then B by block (i, j) then (p, q), then C in order.
Construction g_k(std::size_t k);

struct AbcExtension {
  Construction abc;
  /// id in the G_k input -> id in the ABC graph.
  std::vector<VertexId> embedding;
};

/// Pads A and C of a G_k to k^4 vertices each so the result is an ABC graph
/// containing the input as an induced subgraph. New A vertices follow the
/// original ids, then new C vertices.
AbcExtension extend_gk_to_abc(const Construction& gk);

/// H^n_i: points are ids 0..n^i - 1, boxes follow. Box m of level i holds the
/// copies of point m of H^n_{i-1}.
Construction point_box_incidence(std::size_t n, std::size_t i);

/// Point-box incidences of H^n_i as box -> contained points, in id order.
std::vector<std::vector<VertexId>> point_box_members(std::size_t n, std::size_t i);

inline constexpr std::size_t kMaxHypercubeDim = 16;
Construction hypercube(std::size_t n);

}  // namespace funbox
