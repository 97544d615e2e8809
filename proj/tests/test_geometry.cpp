#include "doctest.h"

#include "funbox/constructions.hpp"
#include "funbox/geometry.hpp"
#include "funbox/interval.hpp"
#include "funbox/random.hpp"
#include "oracles.hpp"

using namespace funbox;

namespace {

BoxSystem squares(std::vector<std::array<std::int64_t, 2>> corners, std::int64_t side) {
  BoxSystem bs;
  bs.d = 2;
  for (auto [x, y] : corners) bs.boxes.push_back({{x, x + side}, {y, y + side}});
  return bs;
}

// A 15-vertex ABC graph given by intervals, coordinates x10.
Graph figure_abc() {
  IntervalRep rep;
  rep.scale_denominator = 10;
  rep.intervals = {{12, 20}, {12, 23}, {12, 26}, {12, 29}, {12, 32},  // A
                   {21, 49}, {24, 40}, {27, 52}, {30, 46}, {33, 43},  // B
                   {50, 65}, {41, 65}, {53, 65}, {47, 65}, {44, 65}}; // C
  std::vector<std::string> labels;
  for (char part : {'A', 'B', 'C'})
    for (int i = 1; i <= 5; ++i) labels.push_back(std::string(1, part) + ":" + std::to_string(i));
  return graph_from_intervals(rep).relabeled(labels);
}

// Independent containment test for points and 2D boxes.
bool contains(const Box& b, const Point2& p) { return b[0].lo <= p.x && p.x <= b[0].hi && b[1].lo <= p.y && p.y <= b[1].hi; }

}  // namespace

TEST_CASE("graph_from_boxes") {
  const Graph touching = graph_from_boxes(squares({{0, 0}, {4, 0}}, 4));
  CHECK(touching.edge_count() == 1);
  const Graph apart = graph_from_boxes(squares({{0, 0}, {5, 0}}, 4));
  CHECK(apart.edge_count() == 0);
  const Graph corner = graph_from_boxes(squares({{0, 0}, {4, 4}}, 4));
  CHECK(corner.edge_count() == 1);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const IntervalRep rep = random_interval_rep(25, seed, 60);
    BoxSystem bs;
    bs.d = 1;
    for (const auto& iv : rep.intervals) bs.boxes.push_back({iv});
    CHECK(equal_labeled(graph_from_boxes(bs), graph_from_intervals(rep)));
  }

  BoxSystem bad;
  bad.d = 2;
  bad.boxes.push_back({{0, 1}});
  CHECK_THROWS_AS(validate(bad), InvalidArgument);
  bad.boxes = {{{2, 1}, {0, 1}}};
  CHECK_THROWS_AS(validate(bad), InvalidArgument);
}

TEST_CASE("realize_pointbox_plane") {
  const auto star = realize_pointbox_plane(2, 1);
  CHECK(star.boxes.boxes.size() == 1);
  REQUIRE(star.points.size() == 2);
  CHECK(star.points[0].y != star.points[1].y);
  CHECK(contains(star.boxes.boxes[0], star.points[0]));
  CHECK(contains(star.boxes.boxes[0], star.points[1]));

  const auto h22 = realize_pointbox_plane(2, 2);
  CHECK(h22.points.size() == 4);
  CHECK(h22.boxes.boxes.size() == 4);
  CHECK(h22.report.equal);
  CHECK(equal_labeled(h22.report.realized, point_box_incidence(2, 2).graph));

  const auto h33 = realize_pointbox_plane(3, 3);
  CHECK(h33.points.size() == 27);
  CHECK(h33.boxes.boxes.size() == 27);
  for (const auto& p : h33.points) {
    int inside = 0;
    for (const auto& b : h33.boxes.boxes) inside += contains(b, p);
    CHECK(inside == 3);
  }
  const Graph target = point_box_incidence(3, 3).graph;
  for (std::size_t p = 0; p < 27; ++p)
    for (std::size_t b = 0; b < 27; ++b)
      CHECK(contains(h33.boxes.boxes[b], h33.points[p]) == target.adjacent(static_cast<VertexId>(p), static_cast<VertexId>(27 + b)));
}

TEST_CASE("realize_pointbox_plane keeps point heights distinct") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t i = 1; i <= n; ++i) {
      const auto r = realize_pointbox_plane(n, i);
      CHECK(r.report.equal);
      std::vector<std::int64_t> ys;
      for (const auto& p : r.points) ys.push_back(p.y);
      std::sort(ys.begin(), ys.end());
      CHECK(std::adjacent_find(ys.begin(), ys.end()) == ys.end());
    }
}

TEST_CASE("embed_pointbox_r3") {
  BoxSystem one;
  one.d = 2;
  one.boxes = {{{0, 2}, {0, 2}}};
  const BoxSystem in = embed_pointbox_r3({{1, 1}}, one);
  CHECK(in.d == 3);
  CHECK(in.scale_denominator == 3);
  CHECK(graph_from_boxes(in).edge_count() == 1);
  const BoxSystem out = embed_pointbox_r3({{3, 1}}, one);
  CHECK(graph_from_boxes(out).edge_count() == 0);
  // touching the boundary still counts as containment
  CHECK(graph_from_boxes(embed_pointbox_r3({{2, 0}}, one)).edge_count() == 1);

  const auto h22 = realize_pointbox_plane(2, 2);
  const BoxSystem r3 = embed_pointbox_r3(h22.points, h22.boxes);
  const Graph g = graph_from_boxes(r3);
  CHECK(equal_labeled(g, point_box_incidence(2, 2).graph));
  // bipartite between columns and slabs
  for (VertexId u = 0; u < 4; ++u)
    for (VertexId v = u + 1; v < 4; ++v) {
      CHECK_FALSE(g.adjacent(u, v));
      CHECK_FALSE(g.adjacent(4 + u, 4 + v));
    }
}

TEST_CASE("realize_abc_unit_squares") {
  const Construction one = abc_graph(1, identity_permutation(1));
  const auto r1 = realize_abc_unit_squares(one.graph, abc_parts(one.labels));
  CHECK(r1.boxes.boxes.size() == 3);
  CHECK(graph_from_boxes(r1.boxes).edge_count() == 0);
  CHECK(r1.report.unit);

  const Graph fig = figure_abc();
  const AbcParts parts = abc_parts_from_labels(fig);
  CHECK_NOTHROW(check_abc_partition(fig, parts.a, parts.b, parts.c));
  const auto rf = realize_abc_unit_squares(fig, parts);
  CHECK(rf.report.equal);
  CHECK(rf.report.unit);
  CHECK(equal_labeled(graph_from_boxes(rf.boxes), fig));

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    SplitMix64 rng(seed);
    const auto n = static_cast<std::size_t>(rng.between(1, 50));
    const Construction g = abc_graph(n, random_permutation(n, rng));
    const auto r = realize_abc_unit_squares(g.graph, abc_parts(g.labels));
    CHECK(equal_labeled(graph_from_boxes(r.boxes), g.graph));
    for (const auto& b : r.boxes.boxes)
      for (const auto& side : b) CHECK(side.hi - side.lo == r.boxes.scale_denominator);
  }

  const Graph not_abc = oracle::cycle(6).relabeled({"A:1", "A:2", "B:1", "B:2", "C:1", "C:2"});
  CHECK_THROWS_AS(realize_abc_unit_squares(not_abc, abc_parts_from_labels(not_abc)), StructureError);
}

TEST_CASE("realize_abc_intervals") {
  const Construction one = abc_graph(1, identity_permutation(1));
  CHECK(graph_from_intervals(realize_abc_intervals(one.graph, abc_parts(one.labels)).rep).edge_count() == 0);

  const Construction two = abc_graph(2, identity_permutation(2));
  const auto r2 = realize_abc_intervals(two.graph, abc_parts(two.labels));
  const Graph g2 = graph_from_intervals(r2.rep);
  CHECK(g2.adjacent(0, 3));
  CHECK_FALSE(g2.adjacent(0, 2));
  CHECK_FALSE(g2.adjacent(1, 3));
  CHECK(g2.adjacent(2, 5));
  CHECK_FALSE(g2.adjacent(3, 5));
  CHECK(equal_labeled(g2, two.graph));
  // a_1 = [0, 10(n-1)+5], c_1 = [Q-5, Q+10] with Q = 100n
  CHECK(r2.rep.intervals[0] == ClosedRange{0, 15});
  CHECK(r2.rep.intervals[4] == ClosedRange{195, 210});

  const AbcExtension ext = extend_gk_to_abc(g_k(2));
  const auto re = realize_abc_intervals(ext.abc.graph, abc_parts(ext.abc.labels));
  CHECK(re.rep.intervals.size() == 48);
  CHECK(equal_labeled(graph_from_intervals(re.rep), ext.abc.graph));

  const Graph fig = figure_abc();
  CHECK(realize_abc_intervals(fig, abc_parts_from_labels(fig)).report.equal);
}

TEST_CASE("abc intervals feed the interval witness") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    SplitMix64 rng(seed);
    const auto n = static_cast<std::size_t>(rng.between(1, 50));
    const Construction g = abc_graph(n, random_permutation(n, rng));
    const auto r = realize_abc_intervals(g.graph, abc_parts(g.labels));
    const Witness w = find_low_fun_witness(normalize(r.rep));
    CHECK(w.arity() <= 8);
    CHECK_FALSE(witness_violation(g.graph, w).has_value());
  }
}
