#include "doctest.h"

#include "funbox/constructions.hpp"
#include "funbox/parameters.hpp"
#include "funbox/random.hpp"
#include "oracles.hpp"

using namespace funbox;

namespace {

// G_k adjacency rebuilt from the vertex labels alone.
bool gk_adjacent(const ConstructionLabels& l, VertexId u, VertexId v) {
  const auto& a = l.vertices[u];
  const auto& b = l.vertices[v];
  if (a.part == b.part) return true;
  if (a.part == Part::b) return gk_adjacent(l, v, u);
  if (a.part == Part::a && b.part == Part::b) return static_cast<std::int64_t>(a.order) < b.bx;
  if (a.part == Part::c && b.part == Part::b) return b.by < static_cast<std::int64_t>(a.order);
  return false;
}

}  // namespace

TEST_CASE("half_graph") {
  CHECK(half_graph(1).graph.edge_count() == 0);
  const Graph h2 = half_graph(2).graph;
  CHECK(h2.edges() == std::vector<Edge>{{0, 3}});
  CHECK(half_graph(3).graph.edge_count() == 3);
  CHECK_THROWS_AS(half_graph(0), InvalidArgument);

  for (std::size_t n = 1; n <= 8; ++n) {
    const Construction h = half_graph(n);
    const auto o = recover_half_graph_orders(h.graph, h.labels.part(Part::x), h.labels.part(Part::y));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(h.graph.adjacent(o.x_order[i], o.y_order[j]) == (i < j));
  }
}

TEST_CASE("abc_graph") {
  CHECK(abc_graph(1, identity_permutation(1)).graph.edge_count() == 0);

  const Graph two = abc_graph(2, identity_permutation(2)).graph;
  // a1 a2 b1 b2 c1 c2 = ids 0..5
  CHECK(two.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {2, 3}, {2, 5}, {4, 5}});

  SplitMix64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto perm = random_permutation(5, rng);
    const Construction g = abc_graph(5, perm);
    const auto o = check_abc_partition(g.graph, g.labels.part(Part::a), g.labels.part(Part::b), g.labels.part(Part::c));
    for (std::size_t i = 0; i < 5; ++i) CHECK(o.b_prime[i] == static_cast<VertexId>(5 + perm[i]));
  }
  const std::vector<std::size_t> bad{0, 0};
  CHECK_THROWS_AS(abc_graph(2, bad), InvalidArgument);
  const std::vector<std::size_t> short_perm{0};
  CHECK_THROWS_AS(abc_graph(2, short_perm), InvalidArgument);
}

TEST_CASE("g_k base block and size") {
  using P = std::pair<std::int64_t, std::int64_t>;
  CHECK(gk_base_block(2) == std::vector<P>{{2, 1}, {1, 3}, {4, 2}, {3, 4}});
  CHECK(g_k(2).graph.size() == 32);
  CHECK(g_k(3).graph.size() == 135);
  CHECK(g_k(4).graph.size() == 384);
  CHECK_THROWS_AS(g_k(1), InvalidArgument);
}

TEST_CASE("g_k edges follow the two threshold rules") {
  for (std::size_t k : {2, 3}) {
    const Construction gk = g_k(k);
    const auto t = static_cast<std::int64_t>(k * k * k);
    for (VertexId u = 0; u < gk.graph.size(); ++u) {
      const auto& lab = gk.labels.vertices[u];
      if (lab.part == Part::b) {
        CHECK(lab.bx >= 1);
        CHECK(lab.bx <= t);
        CHECK(lab.by >= 1);
        CHECK(lab.by <= t);
      }
      for (VertexId v = u + 1; v < gk.graph.size(); ++v) CHECK(gk.graph.adjacent(u, v) == gk_adjacent(gk.labels, u, v));
    }
  }
}

TEST_CASE("g_k has pairwise symmetric difference at least k") {
  for (std::size_t k : {2, 3}) {
    const Graph g = g_k(k).graph;
    std::size_t lo = g.size();
    for (VertexId u = 0; u < g.size(); ++u)
      for (VertexId v = u + 1; v < g.size(); ++v) lo = std::min(lo, sd_pair(g, u, v));
    CHECK(lo >= k);
  }
}

TEST_CASE("extend_gk_to_abc") {
  for (std::size_t k : {2, 3}) {
    const Construction gk = g_k(k);
    const AbcExtension ext = extend_gk_to_abc(gk);
    const std::size_t nb = k * k * k * k;
    CHECK(ext.abc.graph.size() == 3 * nb);
    const auto o = check_abc_partition(ext.abc.graph, ext.abc.labels.part(Part::a), ext.abc.labels.part(Part::b),
                                       ext.abc.labels.part(Part::c));
    const auto sub = induced_subgraph(ext.abc.graph, VertexSet::of(ext.abc.graph.size(), ext.embedding));
    CHECK(equal_labeled(sub.graph, gk.graph));

    // (B, C') order: original C vertices every k positions, k-1 new ones between
    const std::size_t t = k * k * k;
    const std::size_t first_c = gk.graph.size() - t;
    for (std::size_t s = 0; s < nb; ++s) {
      const bool original = o.c[s] < gk.graph.size();
      CHECK(original == (s % k == 0));
      if (original) CHECK(o.c[s] == first_c + s / k);
    }
  }
}

TEST_CASE("point_box_incidence") {
  const Construction star = point_box_incidence(2, 1);
  CHECK(star.graph.edges() == std::vector<Edge>{{0, 2}, {1, 2}});

  const Construction h33 = point_box_incidence(3, 3);
  CHECK(h33.labels.part(Part::point).count() == 27);
  CHECK(h33.labels.part(Part::box).count() == 27);

  const Graph h22 = point_box_incidence(2, 2).graph;
  for (VertexId v = 0; v < h22.size(); ++v) CHECK(h22.degree(v) == 2);
  CHECK(is_k2p_free(h22, 2));

  CHECK_THROWS_AS(point_box_incidence(2, 3), InvalidArgument);
  CHECK_THROWS_AS(point_box_incidence(0, 0), InvalidArgument);
}

TEST_CASE("point_box_incidence follows the recursion") {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (std::size_t i = 2; i <= n; ++i) {
      const auto prev = point_box_members(n, i - 1);
      const auto cur = point_box_members(n, i);
      std::size_t p_prev = 1;
      for (std::size_t e = 0; e + 1 < i; ++e) p_prev *= n;
      REQUIRE(cur.size() == n * prev.size() + p_prev);
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t b = 0; b < prev.size(); ++b) {
          std::vector<VertexId> shifted = prev[b];
          for (auto& p : shifted) p += static_cast<VertexId>(c * p_prev);
          CHECK(cur[c * prev.size() + b] == shifted);
        }
      for (std::size_t m = 0; m < p_prev; ++m) {
        std::vector<VertexId> expect;
        for (std::size_t c = 0; c < n; ++c) expect.push_back(static_cast<VertexId>(c * p_prev + m));
        CHECK(cur[n * prev.size() + m] == expect);
      }
    }
  }
}

TEST_CASE("point_box_incidence counts, degrees and freeness for n <= 4") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t i = 1; i <= n; ++i) {
      const Construction h = point_box_incidence(n, i);
      std::size_t pi = 1;
      for (std::size_t e = 0; e < i; ++e) pi *= n;
      const auto pts = h.labels.part(Part::point);
      CHECK(pts.count() == pi);
      CHECK(h.labels.part(Part::box).count() == i * pi / n);
      for (VertexId v = 0; v < h.graph.size(); ++v) CHECK(h.graph.degree(v) == (pts.contains(v) ? i : n));
      CHECK_FALSE(oracle::has_k2p(h.graph, 2));
      CHECK_FALSE(oracle::has_triangle(h.graph));
    }
}

TEST_CASE("hypercube") {
  const Construction q1 = hypercube(1);
  CHECK(q1.graph.edges() == std::vector<Edge>{{0, 1}});
  const Construction q3 = hypercube(3);
  CHECK(q3.graph.size() == 8);
  CHECK(q3.graph.edge_count() == 12);
  CHECK(q3.labels.to_strings()[5] == "101");
  CHECK(is_k2p_free(hypercube(4).graph, 3));
  CHECK_FALSE(oracle::has_k2p(hypercube(4).graph, 3));
  CHECK(check_refutation_premises(hypercube(4).graph, 1, 3).ok());
  for (std::size_t n = 1; n <= 6; ++n) {
    const Graph q = hypercube(n).graph;
    CHECK(q.min_degree() == n);
    CHECK(q.max_degree() == n);
    CHECK(is_triangle_free(q));
  }
  CHECK_THROWS_AS(hypercube(0), InvalidArgument);
  CHECK_THROWS_AS(hypercube(17), InvalidArgument);
}

TEST_CASE("construction labels") {
  CHECK(half_graph(2).graph.labels() == std::vector<std::string>{"x:1", "x:2", "y:1", "y:2"});
  const auto abc = abc_graph(2, std::vector<std::size_t>{1, 0}).labels.to_strings();
  CHECK(abc == std::vector<std::string>{"A:1", "A:2", "B:1:2", "B:2:1", "C:1", "C:2"});
  CHECK(g_k(2).labels.to_strings()[8] == "B:2,1:1,1,1,0");
  const auto ext = extend_gk_to_abc(g_k(2)).abc.labels.to_strings();
  CHECK(ext.back().back() == '*');
  CHECK(family_from_string("hni") == Family::hni);
  CHECK_THROWS_AS(family_from_string("petersen"), InvalidArgument);
}
