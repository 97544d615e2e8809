#include "funbox/graph.hpp"

#include <algorithm>

namespace funbox {

VertexSet VertexSet::all(std::size_t n) {
  VertexSet s(n);
  for (VertexId v = 0; v < n; ++v) s.insert(v);
  return s;
}

VertexSet VertexSet::of(std::size_t n, std::span<const VertexId> ids) {
  VertexSet s(n);
  for (VertexId v : ids) s.insert(v);
  return s;
}

void VertexSet::insert(VertexId v) {
  if (v >= n_) throw InvalidArgument("vertex " + std::to_string(v) + " outside universe of size " + std::to_string(n_));
  words_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
}

void VertexSet::erase(VertexId v) {
  if (v < n_) words_[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
}

std::size_t VertexSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    for (std::uint64_t w = words_[wi]; w != 0; w &= w - 1) {
      out.push_back(static_cast<VertexId>(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w))));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

GraphBuilder::GraphBuilder(std::size_t n) : n_(n), w_(words_for(n)), rows_(n * words_for(n), 0) {}

void GraphBuilder::add_edge(VertexId u, VertexId v) {
  if (u >= n_ || v >= n_) {
    throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                          std::to_string(n_));
  }
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  rows_[u * w_ + v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
  rows_[v * w_ + u / kWordBits] |= std::uint64_t{1} << (u % kWordBits);
}

bool GraphBuilder::has_edge(VertexId u, VertexId v) const {
  return ((rows_[u * w_ + v / kWordBits] >> (v % kWordBits)) & 1U) != 0;
}

void GraphBuilder::add_clique(std::span<const VertexId> vs) {
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b) add_edge(vs[a], vs[b]);
}

void GraphBuilder::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n_) throw InvalidArgument("label count does not match vertex count");
  labels_ = std::move(labels);
}

Graph GraphBuilder::build() && {
  Graph g;
  g.n_ = n_;
  g.w_ = w_;
  g.rows_ = std::move(rows_);
  g.labels_ = std::move(labels_);
  return g;
}

// ---------------------------------------------------------------------------

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

std::size_t Graph::degree(VertexId u) const {
  std::size_t d = 0;
  for (auto w : row(u)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::vector<VertexId> Graph::neighbors(VertexId u) const {
  std::vector<VertexId> out;
  auto r = row(u);
  for (std::size_t wi = 0; wi < r.size(); ++wi) {
    for (std::uint64_t w = r[wi]; w != 0; w &= w - 1) {
      out.push_back(static_cast<VertexId>(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w))));
    }
  }
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (VertexId u = 0; u < n_; ++u) total += degree(u);
  return total / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (VertexId u = 0; u < n_; ++u)
    for (VertexId v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::size_t Graph::min_degree() const {
  std::size_t m = n_ == 0 ? 0 : n_;
  for (VertexId u = 0; u < n_; ++u) m = std::min(m, degree(u));
  return m;
}

std::size_t Graph::max_degree() const {
  std::size_t m = 0;
  for (VertexId u = 0; u < n_; ++u) m = std::max(m, degree(u));
  return m;
}

Graph Graph::relabeled(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != n_) throw InvalidArgument("label count does not match vertex count");
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

// ---------------------------------------------------------------------------

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& subset) {
  if (subset.universe() != g.size()) throw InvalidArgument("vertex set universe does not match graph");
  InducedSubgraph out;
  out.new_to_old = subset.members();
  if (out.new_to_old.empty()) throw InvalidArgument("induced subgraph of an empty vertex set");
  out.old_to_new.assign(g.size(), InducedSubgraph::kAbsent);
  for (std::size_t i = 0; i < out.new_to_old.size(); ++i) out.old_to_new[out.new_to_old[i]] = static_cast<VertexId>(i);

  GraphBuilder b(out.new_to_old.size());
  for (std::size_t i = 0; i < out.new_to_old.size(); ++i) {
    for (VertexId old_nb : g.neighbors(out.new_to_old[i])) {
      VertexId j = out.old_to_new[old_nb];
      if (j != InducedSubgraph::kAbsent && j > i) b.add_edge(static_cast<VertexId>(i), j);
    }
  }
  if (g.has_labels()) {
    std::vector<std::string> labels;
    labels.reserve(out.new_to_old.size());
    for (VertexId old : out.new_to_old) labels.push_back(g.labels()[old]);
    b.set_labels(std::move(labels));
  }
  out.graph = std::move(b).build();
  return out;
}

bool equal_labeled(const Graph& a, const Graph& b) { return !first_difference(a, b).has_value() && a.size() == b.size(); }

std::optional<Edge> first_difference(const Graph& a, const Graph& b) {
  if (a.size() != b.size()) return Edge{0, 0};
  for (VertexId u = 0; u < a.size(); ++u) {
    auto ra = a.row(u);
    auto rb = b.row(u);
    for (std::size_t wi = 0; wi < ra.size(); ++wi) {
      if (std::uint64_t diff = ra[wi] ^ rb[wi]; diff != 0) {
        return Edge{u, static_cast<VertexId>(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(diff)))};
      }
    }
  }
  return std::nullopt;
}

}  // namespace funbox
