#include <algorithm>
#include <bit>
#include <numeric>

#include "funbox/parameters.hpp"

namespace funbox {
namespace {

std::size_t common_neighbours(const Graph& g, VertexId u, VertexId v) {
  auto ru = g.row(u);
  auto rv = g.row(v);
  std::size_t c = 0;
  for (std::size_t i = 0; i < ru.size(); ++i) c += static_cast<std::size_t>(std::popcount(ru[i] & rv[i]));
  return c;
}

std::size_t neighbours_in(const Graph& g, VertexId u, const VertexSet& s) {
  auto r = g.row(u);
  auto w = s.words();
  std::size_t c = 0;
  for (std::size_t i = 0; i < r.size(); ++i) c += static_cast<std::size_t>(std::popcount(r[i] & w[i]));
  return c;
}

void check_universe(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.size()) throw InvalidArgument("vertex set universe does not match graph");
}

}  // namespace

bool is_triangle_free(const Graph& g) {
  for (auto [u, v] : g.edges())
    if (common_neighbours(g, u, v) != 0) return false;
  return true;
}

bool is_k2p_free(const Graph& g, std::size_t p) {
  for (VertexId u = 0; u < g.size(); ++u)
    for (VertexId v = u + 1; v < g.size(); ++v)
      if (common_neighbours(g, u, v) >= p) return false;
  return true;
}

bool is_threshold(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> deg(n);
  for (VertexId v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::size_t remaining = n;
  while (remaining > 0) {
    std::optional<VertexId> peel;
    for (VertexId v = 0; v < n && !peel; ++v)
      if (alive[v] && (deg[v] == 0 || deg[v] == remaining - 1)) peel = v;
    if (!peel) return false;
    alive[*peel] = false;
    --remaining;
    for (VertexId nb : g.neighbors(*peel))
      if (alive[nb]) --deg[nb];
  }
  return true;
}

StructureReport structure_scan(const Graph& g, std::size_t p) {
  if (p < 2) throw InvalidArgument("structure_scan needs p >= 2");
  StructureReport r;
  r.p = p;
  const std::size_t n = g.size();
  for (VertexId x = 0; x < n; ++x) {
    for (VertexId y = x + 1; y < n; ++y) {
      const std::size_t sd = sd_pair(g, x, y);
      if (sd == 0) r.twin_pairs.emplace_back(x, y);
      if (sd == n - 2) r.anti_twin_pairs.emplace_back(x, y);
    }
  }
  r.triangle_free = is_triangle_free(g);
  r.k2p_free = is_k2p_free(g, p);
  r.threshold = is_threshold(g);
  return r;
}

HalfGraphOrders recover_half_graph_orders(const Graph& g, const VertexSet& x, const VertexSet& y) {
  check_universe(g, x);
  check_universe(g, y);
  const auto xs = x.members();
  const auto ys = y.members();
  if (xs.size() != ys.size()) {
    throw StructureError("half graph sides differ in size: " + std::to_string(xs.size()) + " vs " + std::to_string(ys.size()));
  }
  if (xs.empty()) throw StructureError("half graph sides are empty");
  for (VertexId v : xs)
    if (y.contains(v)) throw InvalidArgument("half graph sides overlap at vertex " + std::to_string(v));
  const std::size_t m = xs.size();

  // x_1 sees m-1 vertices of Y, x_m sees none; y_1 sees no X vertex, y_m sees m-1
  HalfGraphOrders out;
  out.x_order.assign(m, 0);
  std::vector<bool> x_slot(m, false);
  for (VertexId v : xs) {
    const std::size_t d = neighbours_in(g, v, y);
    if (d >= m) throw StructureError("X vertex adjacent to all of Y", v, v);
    const std::size_t slot = m - 1 - d;
    if (x_slot[slot]) throw StructureError("two X vertices with equal neighbourhood size in Y", out.x_order[slot], v);
    x_slot[slot] = true;
    out.x_order[slot] = v;
  }
  out.y_order.assign(m, 0);
  std::vector<bool> y_slot(m, false);
  for (VertexId v : ys) {
    const std::size_t d = neighbours_in(g, v, x);
    if (d >= m) throw StructureError("Y vertex adjacent to all of X", v, v);
    if (y_slot[d]) throw StructureError("two Y vertices with equal neighbourhood size in X", out.y_order[d], v);
    y_slot[d] = true;
    out.y_order[d] = v;
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (g.adjacent(out.x_order[i], out.y_order[j]) != (i < j)) {
        throw StructureError("neighbourhoods are not nested", out.x_order[i], out.y_order[j]);
      }
    }
  }
  return out;
}

AbcOrders check_abc_partition(const Graph& g, const VertexSet& a, const VertexSet& b, const VertexSet& c) {
  check_universe(g, a);
  check_universe(g, b);
  check_universe(g, c);
  for (VertexId v = 0; v < g.size(); ++v) {
    const int hits = int{a.contains(v)} + int{b.contains(v)} + int{c.contains(v)};
    if (hits != 1) throw StructureError("A, B, C do not partition the vertices at vertex " + std::to_string(v));
  }
  if (a.count() != b.count() || b.count() != c.count()) {
    throw StructureError("ABC parts differ in size: |A|=" + std::to_string(a.count()) + " |B|=" + std::to_string(b.count()) +
                         " |C|=" + std::to_string(c.count()));
  }
  for (const VertexSet* part : {&a, &b, &c}) {
    const auto vs = part->members();
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (!g.adjacent(vs[i], vs[j])) throw StructureError("part is not a clique", vs[i], vs[j]);
  }
  for (VertexId u : a.members())
    for (VertexId v : c.members())
      if (g.adjacent(u, v)) throw StructureError("edge between A and C", u, v);

  auto ab = recover_half_graph_orders(g, a, b);
  auto bc = recover_half_graph_orders(g, b, c);
  return {std::move(ab.x_order), std::move(ab.y_order), std::move(bc.x_order), std::move(bc.y_order)};
}

}  // namespace funbox
