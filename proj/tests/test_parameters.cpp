#include "doctest.h"

#include "funbox/constructions.hpp"
#include "funbox/hitting_set.hpp"
#include "funbox/kernels.hpp"
#include "funbox/parameters.hpp"
#include "funbox/random.hpp"
#include "oracles.hpp"

using namespace funbox;

namespace {

VertexId bits(const char* s) { return static_cast<VertexId>(std::stoul(s, nullptr, 2)); }

std::vector<std::size_t> to_local(const VertexSet& s) {
  const auto m = s.members();
  return {m.begin(), m.end()};
}

}  // namespace

TEST_CASE("sd_pair") {
  CHECK(sd_pair(oracle::complete(5), 0, 1) == 0);
  CHECK(sd_pair(oracle::path(4), 0, 1) == 1);
  CHECK(sd_pair(oracle::path(4), 1, 2) == 2);
  CHECK_THROWS_AS(sd_pair(oracle::path(4), 2, 2), InvalidArgument);
}

TEST_CASE("sd_graph") {
  CHECK(sd_graph(Graph::from_edge_list(1, {})) == 0);
  CHECK(sd_graph(oracle::complete(4)) == 0);
  CHECK(sd_graph(oracle::cycle(5)) == 2);
  CHECK(sd_graph(oracle::cycle(5), {}, Exec::serial) == 2);
  CHECK_THROWS_AS(sd_graph(oracle::path(15)), SizeLimitError);
  Limits wide;
  wide.sd_max_n = 15;
  CHECK(sd_graph(oracle::path(15), wide) == oracle::sd_graph(oracle::path(15)));
}

TEST_CASE("is_function_of") {
  const Graph c4 = oracle::cycle(4);  // 0 and 2 are twins
  CHECK(is_function_of(c4, 2, VertexSet::of(4, {0})).holds);

  const Graph c5 = oracle::cycle(5);
  CHECK(is_function_of(c5, 0, VertexSet::of(5, {1, 4})).holds);

  const auto r = is_function_of(c5, 0, VertexSet::of(5, {2}));
  CHECK_FALSE(r.holds);
  REQUIRE(r.counterexample.has_value());
  const auto [z, w] = *r.counterexample;
  CHECK(c5.adjacent(z, 2) == c5.adjacent(w, 2));
  CHECK(c5.adjacent(0, z) != c5.adjacent(0, w));

  CHECK_THROWS_AS(is_function_of(c5, 0, VertexSet::of(5, {0})), InvalidArgument);
}

TEST_CASE("fun_vertex small cases") {
  const Graph s = oracle::star(4);
  CHECK(fun_vertex(s, 0).k == 0);  // dominating
  CHECK(fun_vertex(Graph::from_edge_list(3, {{0, 1}}), 2).k == 0);  // isolated
  CHECK(fun_vertex(Graph::from_edge_list(1, {}), 0).k == 0);

  const Graph c5 = oracle::cycle(5);
  for (VertexId v = 0; v < 5; ++v) {
    const auto r = fun_vertex(c5, v);
    CHECK(r.k == 2);
    CHECK_FALSE(witness_violation(c5, r.witness).has_value());
  }

  const Graph q3 = hypercube(3).graph;
  for (VertexId v = 0; v < 8; ++v) {
    const auto r = fun_vertex(q3, v);
    CHECK(r.k == 1);
    CHECK(r.witness.args == std::vector<VertexId>{v ^ 7U});
    CHECK(r.witness.table == std::vector<bool>{true, false});
  }
}

TEST_CASE("fun_vertex agrees with subset enumeration, including tie-breaking") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const auto n = static_cast<std::size_t>(rng.between(1, 10));
    const Graph g = random_graph(n, rng.between(1, 7), 8, rng.next());
    for (VertexId y = 0; y < n; ++y) {
      const auto ours = fun_vertex(g, y);
      const auto ref = oracle::fun_vertex(g, y);
      CHECK(ours.k == ref.first);
      CHECK(ours.witness.args == ref.second);
      CHECK_FALSE(witness_violation(g, ours.witness).has_value());
    }
  }
}

TEST_CASE("hitting-set formulation matches the definition") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto n = static_cast<std::size_t>(rng.between(2, 12));
    const Graph g = random_graph(n, rng.between(0, 8), 8, rng.next());
    const auto y = static_cast<VertexId>(rng.below(n));
    VertexSet s(n);
    for (VertexId v = 0; v < n; ++v)
      if (v != y && rng.below(3) == 0) s.insert(v);
    std::vector<VertexId> all;
    for (VertexId v = 0; v < n; ++v) all.push_back(v);
    const auto m = oracle::matrix(g, all);
    const bool direct = oracle::is_function_of(m, y, to_local(s));
    CHECK(oracle::hits_all_conflicts(m, y, to_local(s)) == direct);
    CHECK(is_function_of(g, y, s).holds == direct);

    // the kernel's requirement sets encode the same condition
    const auto mg = kernels::MaskGraph::from(g);
    const auto sets = kernels::conflict_sets(mg, kernels::full_mask(n), y);
    std::uint64_t smask = 0;
    for (VertexId v : s.members()) smask |= kernels::bit(v);
    bool hits = true;
    for (auto r : sets) hits = hits && (r & smask) != 0;
    CHECK(hits == direct);
  }
}

TEST_CASE("HittingSet") {
  HittingSet h({0b011, 0b110, 0b111});
  CHECK(h.sets().size() == 2);
  CHECK(h.minimum() == 1);
  CHECK(h.lex_least_minimum() == 0b010);
  CHECK(h.feasible(1));
  CHECK_FALSE(h.feasible(0));
  CHECK_FALSE(h.feasible(0b101, 1));

  HittingSet disjoint({0b0011, 0b1100, 0b110000});
  CHECK(disjoint.minimum() == 3);
  CHECK(disjoint.lex_least_minimum() == 0b010101);
  CHECK(HittingSet({}).minimum() == 0);
  CHECK(HittingSet({0b1, 0}).infeasible());
}

TEST_CASE("fun_graph") {
  CHECK(fun_graph(oracle::star(3)) == 0);
  CHECK(fun_graph(oracle::path(4)) == 1);
  CHECK(fun_graph(oracle::cycle(5)) == 2);
  CHECK(fun_graph(Graph::from_edge_list(1, {})) == 0);
  CHECK_THROWS_AS(fun_graph(oracle::path(13)), SizeLimitError);
}

TEST_CASE("graph-level sweeps match the brute-force definitions") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const auto n = static_cast<std::size_t>(rng.between(1, 8));
    const Graph g = random_graph(n, rng.between(1, 7), 8, rng.next());
    CHECK(fun_graph(g, {}, Exec::serial) == oracle::fun_graph(g));
    CHECK(sd_graph(g, {}, Exec::serial) == oracle::sd_graph(g));
  }
}

TEST_CASE("serial and parallel sweeps agree") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const auto n = static_cast<std::size_t>(rng.between(1, 12));
    const Graph g = random_graph(n, rng.between(1, 7), 8, rng.next());
    CHECK(fun_graph(g, {}, Exec::serial) == fun_graph(g, {}, Exec::parallel));
    CHECK(sd_graph(g, {}, Exec::serial) == sd_graph(g, {}, Exec::parallel));
  }
}

TEST_CASE("pair_witness") {
  const Graph c4 = oracle::cycle(4);
  const Witness tw = pair_witness(c4, 0, 2, PairMode::distinguishers);
  CHECK(tw.args == std::vector<VertexId>{2});
  CHECK(tw.table == std::vector<bool>{false, true});
  CHECK(tw.origin == WitnessOrigin::pair_distinguishers);

  const Graph q3 = hypercube(3).graph;
  const Witness anti = pair_witness(q3, bits("000"), bits("111"), PairMode::nondistinguishers);
  CHECK(anti.args == std::vector<VertexId>{bits("111")});
  CHECK(anti.table == std::vector<bool>{true, false});

  const Graph p4 = oracle::path(4);
  const Witness w = pair_witness(p4, 0, 1, PairMode::distinguishers);
  CHECK(w.args == std::vector<VertexId>{1, 2});
  CHECK_FALSE(witness_violation(p4, w).has_value());
  CHECK(w.table == std::vector<bool>{false, true, false, true});

  CHECK_THROWS_AS(pair_witness(p4, 1, 1, PairMode::distinguishers), InvalidArgument);
}

TEST_CASE("witness validation rejects bad certificates") {
  const Graph p4 = oracle::path(4);
  Witness w;
  w.target = 0;
  w.args = {3};
  w.table = {true, true};
  CHECK(witness_violation(p4, w).has_value());
  CHECK_THROWS_AS(require_valid(p4, w), ValidationError);
  w.args = {0};
  CHECK_THROWS_AS(require_valid(p4, w), ValidationError);
}

TEST_CASE("structure_scan") {
  const auto c4 = structure_scan(oracle::cycle(4), 2);
  CHECK(c4.twin_pairs == std::vector<Edge>{{0, 2}, {1, 3}});
  CHECK(c4.triangle_free);
  CHECK_FALSE(c4.k2p_free);

  const auto q4 = structure_scan(hypercube(4).graph, 3);
  CHECK(q4.k2p_free);
  CHECK(q4.triangle_free);

  CHECK(structure_scan(oracle::star(3), 2).threshold);
  CHECK_FALSE(structure_scan(oracle::path(4), 2).threshold);
  CHECK_THROWS_AS(structure_scan(oracle::path(4), 1), InvalidArgument);

  const auto q3 = structure_scan(hypercube(3).graph, 2);
  CHECK(q3.anti_twin_pairs.size() == 4);
  CHECK(q3.anti_twin_pairs.front() == Edge{0, 7});
}

TEST_CASE("structural predicates match brute force") {
  SplitMix64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(rng.between(1, 9));
    const Graph g = trial % 2 == 0 ? random_threshold_graph(n, rng) : random_graph(n, rng.between(0, 8), 8, rng.next());
    CHECK(is_threshold(g) == oracle::threshold(g));
    CHECK(is_triangle_free(g) == !oracle::has_triangle(g));
    CHECK(is_k2p_free(g, 2) == !oracle::has_k2p(g, 2));
    CHECK(is_k2p_free(g, 3) == !oracle::has_k2p(g, 3));
  }
}

TEST_CASE("recover_half_graph_orders") {
  const Construction h = half_graph(3);
  const auto x = h.labels.part(Part::x);
  const auto y = h.labels.part(Part::y);
  const auto o = recover_half_graph_orders(h.graph, x, y);
  CHECK(o.x_order == std::vector<VertexId>{0, 1, 2});
  CHECK(o.y_order == std::vector<VertexId>{3, 4, 5});

  const Graph single = Graph::from_edge_list(2, {});
  const auto s = recover_half_graph_orders(single, VertexSet::of(2, {0}), VertexSet::of(2, {1}));
  CHECK(s.x_order == std::vector<VertexId>{0});

  const Graph k22 = Graph::from_edge_list(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK_THROWS_AS(recover_half_graph_orders(k22, VertexSet::of(4, {0, 1}), VertexSet::of(4, {2, 3})), StructureError);
  CHECK_THROWS_AS(recover_half_graph_orders(k22, VertexSet::of(4, {0}), VertexSet::of(4, {2, 3})), StructureError);
}

TEST_CASE("check_abc_partition") {
  const Construction one = abc_graph(1, identity_permutation(1));
  CHECK(one.graph.edge_count() == 0);
  CHECK_NOTHROW(check_abc_partition(one.graph, one.labels.part(Part::a), one.labels.part(Part::b), one.labels.part(Part::c)));

  const std::vector<std::size_t> perm{1, 0, 3, 2};  // (2,1,4,3) in 1-based form
  const Construction four = abc_graph(4, perm);
  const auto o = check_abc_partition(four.graph, four.labels.part(Part::a), four.labels.part(Part::b), four.labels.part(Part::c));
  CHECK(o.b != o.b_prime);
  CHECK(o.b == std::vector<VertexId>{4, 5, 6, 7});
  CHECK(o.b_prime == std::vector<VertexId>{5, 4, 7, 6});

  const Construction g2 = g_k(2);
  try {
    check_abc_partition(g2.graph, g2.labels.part(Part::a), g2.labels.part(Part::b), g2.labels.part(Part::c));
    FAIL("G_2 accepted as an ABC graph");
  } catch (const StructureError& e) {
    CHECK(std::string(e.what()).find("size") != std::string::npos);
  }

  GraphBuilder b(3);
  b.add_edge(0, 2);
  const Graph ac = std::move(b).build();
  CHECK_THROWS_AS(check_abc_partition(ac, VertexSet::of(3, {0}), VertexSet::of(3, {1}), VertexSet::of(3, {2})), StructureError);
}

TEST_CASE("refutation") {
  const Graph q4 = hypercube(4).graph;
  const auto prem = check_refutation_premises(q4, 1, 3);
  CHECK(prem.ok());
  const auto pair = refute_function(q4, bits("0000"), VertexSet::of(16, {bits("1111")}), 1, 3);
  CHECK(pair.u == bits("0001"));
  CHECK(pair.w == bits("0011"));
  CHECK_FALSE(is_function_of(q4, 0, VertexSet::of(16, {bits("1111")})).holds);

  const Graph h44 = point_box_incidence(4, 4).graph;
  SplitMix64 rng(3);
  const auto hp = check_refutation_premises(h44, 1, 2);
  REQUIRE(hp.ok());
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = static_cast<VertexId>(rng.below(h44.size()));
    auto s = static_cast<VertexId>(rng.below(h44.size()));
    if (s == x) s = (s + 1) % h44.size();
    const VertexSet set = VertexSet::of(h44.size(), {s});
    const auto r = refute_function(h44, hp, x, set);
    CHECK(h44.adjacent(x, r.u));
    CHECK_FALSE(h44.adjacent(x, r.w));
    CHECK(h44.adjacent(s, r.u) == h44.adjacent(s, r.w));
    CHECK_FALSE(is_function_of(h44, x, set).holds);
  }

  const Graph star5 = oracle::star(5);
  try {
    refute_function(star5, 0, VertexSet::of(6, {1}), 1, 2);
    FAIL("premises should fail on a star");
  } catch (const PremiseError& e) {
    CHECK_FALSE(e.violated().empty());
  }
}

TEST_CASE("fun_vertex refuses graphs above 64 vertices") {
  CHECK_THROWS_AS(fun_vertex(oracle::path(65), 0), SizeLimitError);
}
