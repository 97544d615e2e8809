#pragma once

// Exact functionality and symmetric difference, functionality witnesses, and
// the structural predicates used by the constructions.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "funbox/graph.hpp"

namespace funbox {

enum class Exec { serial, parallel };

/// Guards for the exponential graph-level sweeps.
struct Limits {
  std::size_t fun_max_n = 12;
  std::size_t sd_max_n = 14;

  /// Defaults, with both guards replaced by FUNBOX_MAX_N when that variable is set.
  static Limits from_env();
};

/// Hard ceiling for subset sweeps regardless of configured limits.
inline constexpr std::size_t kSweepCeiling = 40;
/// Largest witness arity whose truth table is stored explicitly.
inline constexpr std::size_t kMaxTableArity = 24;

enum class WitnessOrigin {
  pair_distinguishers,
  pair_nondistinguishers,
  stripe_case1,
  stripe_case2,
  small_n,
  exhaustive,
};

std::string_view to_string(WitnessOrigin o);
WitnessOrigin witness_origin_from_string(std::string_view s);

/// Certificate that `target` is a function of `args`: for every other vertex z,
/// adjacency(target, z) == table[profile(z)], where bit i of profile(z) is the
/// adjacency of z to args[i].
struct Witness {
  VertexId target = 0;
  std::vector<VertexId> args;
  std::vector<bool> table;
  WitnessOrigin origin = WitnessOrigin::exhaustive;

  std::size_t arity() const { return args.size(); }
};

/// Pattern of z's adjacency to the witness arguments, as a table index.
std::uint64_t profile(const Graph& g, VertexId z, const std::vector<VertexId>& args);

/// First vertex whose adjacency to the target disagrees with the table, if any.
std::optional<VertexId> witness_violation(const Graph& g, const Witness& w);
/// Throws ValidationError when the witness is malformed or mispredicts a vertex.
void require_valid(const Graph& g, const Witness& w);

/// Number of vertices other than x, y adjacent to exactly one of them.
std::size_t sd_pair(const Graph& g, VertexId x, VertexId y);

/// max over induced subgraphs with >= 2 vertices of min pair sd; 0 for one vertex.
std::size_t sd_graph(const Graph& g, const Limits& limits = {}, Exec exec = Exec::parallel);

struct FunctionCheck {
  bool holds = false;
  /// On failure: two vertices with the same profile on S and different adjacency to y.
  std::optional<Edge> counterexample;
};

FunctionCheck is_function_of(const Graph& g, VertexId y, const VertexSet& args);

struct FunVertexResult {
  std::size_t k = 0;
  Witness witness;
};

/// Exact minimum arity with a lexicographically least argument set. At most 64 vertices.
FunVertexResult fun_vertex(const Graph& g, VertexId y);

/// max over nonempty induced subgraphs of min over vertices of fun.
std::size_t fun_graph(const Graph& g, const Limits& limits = {}, Exec exec = Exec::parallel);

enum class PairMode { distinguishers, nondistinguishers };

/// x as a function of y together with the vertices distinguishing (resp. not
/// distinguishing) x and y. The table reads only y's bit.
Witness pair_witness(const Graph& g, VertexId x, VertexId y, PairMode mode);

struct StructureReport {
  std::size_t p = 2;
  std::vector<Edge> twin_pairs;
  std::vector<Edge> anti_twin_pairs;
  bool triangle_free = true;
  bool k2p_free = true;
  bool threshold = true;
};

/// Twins, anti-twins, triangle- and K_{2,p}-freeness, and threshold recognition by peeling.
StructureReport structure_scan(const Graph& g, std::size_t p);

bool is_triangle_free(const Graph& g);
/// No two vertices with p or more common neighbours.
bool is_k2p_free(const Graph& g, std::size_t p);
/// Repeatedly removes an isolated or dominating vertex; true when nothing is left.
bool is_threshold(const Graph& g);

struct HalfGraphOrders {
  std::vector<VertexId> x_order;
  std::vector<VertexId> y_order;
};

/// Orders with x_order[i] ~ y_order[j] iff i < j, considering only X-Y edges.
/// Throws StructureError when the bipartite pattern is not a half graph.
HalfGraphOrders recover_half_graph_orders(const Graph& g, const VertexSet& x, const VertexSet& y);

struct AbcOrders {
  std::vector<VertexId> a;
  std::vector<VertexId> b;        ///< order realizing the A-B half graph
  std::vector<VertexId> b_prime;  ///< order realizing the B-C half graph
  std::vector<VertexId> c;
};

/// Checks the three-clique half-graph structure and returns the four orders.
AbcOrders check_abc_partition(const Graph& g, const VertexSet& a, const VertexSet& b, const VertexSet& c);

struct RefutationPair {
  VertexId u = 0;
  VertexId w = 0;
};

struct PremiseReport {
  std::size_t k = 0;
  std::size_t p = 0;
  bool triangle_free = false;
  bool k2p_free = false;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::vector<std::string> violated;

  bool ok() const { return violated.empty(); }
};

/// Triangle-free, K_{2,p}-free, min degree >= kp+1, (k+1) * max degree <= n-k-2.
PremiseReport check_refutation_premises(const Graph& g, std::size_t k, std::size_t p);

/// A neighbour u and a non-neighbour w of x, both outside S and N(S), so that
/// x cannot be a function of S. Throws PremiseError when the premises fail.
RefutationPair refute_function(const Graph& g, VertexId x, const VertexSet& s, std::size_t k, std::size_t p);
/// Same, reusing a premise report computed once for the graph.
RefutationPair refute_function(const Graph& g, const PremiseReport& premises, VertexId x, const VertexSet& s);

}  // namespace funbox
