#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "funbox/error.hpp"

namespace funbox {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

inline constexpr std::size_t kWordBits = 64;

inline std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

/// Subset of the vertex ids 0..n-1 of some host graph, stored as a bit vector.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t n) : n_(n), words_(words_for(n), 0) {}

  static VertexSet all(std::size_t n);
  static VertexSet of(std::size_t n, std::span<const VertexId> ids);
  static VertexSet of(std::size_t n, std::initializer_list<VertexId> ids) {
    return of(n, std::span<const VertexId>(ids.begin(), ids.size()));
  }

  std::size_t universe() const { return n_; }
  bool contains(VertexId v) const {
    return v < n_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U) != 0;
  }
  void insert(VertexId v);
  void erase(VertexId v);
  std::size_t count() const;
  bool empty() const { return count() == 0; }
  std::vector<VertexId> members() const;
  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Simple undirected labeled graph on vertices 0..n-1 with bit-row adjacency.
/// Immutable once built; construct through GraphBuilder or from_edge_list.
class Graph {
 public:
  Graph() = default;

  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);
  static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t size() const { return n_; }
  std::size_t row_words() const { return w_; }

  bool adjacent(VertexId u, VertexId v) const {
    return ((rows_[u * w_ + v / kWordBits] >> (v % kWordBits)) & 1U) != 0;
  }
  std::span<const std::uint64_t> row(VertexId u) const { return {rows_.data() + u * w_, w_}; }

  std::size_t degree(VertexId u) const;
  std::vector<VertexId> neighbors(VertexId u) const;
  std::size_t edge_count() const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  std::size_t min_degree() const;
  std::size_t max_degree() const;

  const std::vector<std::string>& labels() const { return labels_; }
  bool has_labels() const { return !labels_.empty(); }
  Graph relabeled(std::vector<std::string> labels) const;

 private:
  friend class GraphBuilder;

  std::size_t n_ = 0;
  std::size_t w_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<std::string> labels_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);

  std::size_t size() const { return n_; }
  /// Adds {u, v}; repeated edges are idempotent. Throws on self-loops and out-of-range ids.
  void add_edge(VertexId u, VertexId v);
  bool has_edge(VertexId u, VertexId v) const;
  /// Makes every pair in `vs` adjacent.
  void add_clique(std::span<const VertexId> vs);
  void set_labels(std::vector<std::string> labels);

  Graph build() &&;

 private:
  std::size_t n_;
  std::size_t w_;
  std::vector<std::uint64_t> rows_;
  std::vector<std::string> labels_;
};

struct InducedSubgraph {
  Graph graph;
  /// old id -> new id, or kAbsent for vertices outside the subset.
  std::vector<VertexId> old_to_new;
  std::vector<VertexId> new_to_old;

  static constexpr VertexId kAbsent = ~VertexId{0};
};

/// Subgraph induced by a nonempty subset. New ids follow the order of old ids.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& subset);

/// Same vertex count and identical adjacency rows. Labels are ignored.
bool equal_labeled(const Graph& a, const Graph& b);

/// First pair (u < v) where the adjacency of `a` and `b` differ, for diagnostics.
std::optional<Edge> first_difference(const Graph& a, const Graph& b);

}  // namespace funbox
