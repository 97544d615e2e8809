#include "funbox/parameters.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>

#include "funbox/hitting_set.hpp"
#include "funbox/kernels.hpp"

namespace funbox {
namespace {

void check_vertex(const Graph& g, VertexId v) {
  if (v >= g.size()) throw InvalidArgument("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(g.size()));
}

void check_sweep_size(const Graph& g, std::size_t limit, const char* what) {
  if (g.size() > limit) throw SizeLimitError(std::string(what) + " on " + std::to_string(g.size()) + " vertices", limit);
  if (g.size() > kSweepCeiling) throw SizeLimitError(std::string(what) + " exceeds the sweep ceiling", kSweepCeiling);
}

bool bit_at(std::span<const std::uint64_t> words, VertexId v) {
  return ((words[v / kWordBits] >> (v % kWordBits)) & 1U) != 0;
}

}  // namespace

Limits Limits::from_env() {
  Limits l;
  if (const char* env = std::getenv("FUNBOX_MAX_N"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) throw InvalidArgument(std::string("FUNBOX_MAX_N is not a positive integer: ") + env);
    l.fun_max_n = l.sd_max_n = static_cast<std::size_t>(v);
  }
  return l;
}

std::string_view to_string(WitnessOrigin o) {
  switch (o) {
    case WitnessOrigin::pair_distinguishers: return "pair-distinguishers";
    case WitnessOrigin::pair_nondistinguishers: return "pair-nondistinguishers";
    case WitnessOrigin::stripe_case1: return "stripe-case1";
    case WitnessOrigin::stripe_case2: return "stripe-case2";
    case WitnessOrigin::small_n: return "small-n";
    case WitnessOrigin::exhaustive: return "exhaustive";
  }
  return "exhaustive";
}

WitnessOrigin witness_origin_from_string(std::string_view s) {
  for (auto o : {WitnessOrigin::pair_distinguishers, WitnessOrigin::pair_nondistinguishers, WitnessOrigin::stripe_case1,
                 WitnessOrigin::stripe_case2, WitnessOrigin::small_n, WitnessOrigin::exhaustive}) {
    if (to_string(o) == s) return o;
  }
  throw InvalidArgument("unknown witness origin '" + std::string(s) + "'");
}

std::uint64_t profile(const Graph& g, VertexId z, const std::vector<VertexId>& args) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < args.size(); ++i)
    if (g.adjacent(z, args[i])) m |= std::uint64_t{1} << i;
  return m;
}

std::optional<VertexId> witness_violation(const Graph& g, const Witness& w) {
  std::vector<bool> used(g.size(), false);
  used[w.target] = true;
  for (VertexId a : w.args) used[a] = true;
  for (VertexId z = 0; z < g.size(); ++z) {
    if (used[z]) continue;
    if (w.table[profile(g, z, w.args)] != g.adjacent(w.target, z)) return z;
  }
  return std::nullopt;
}

void require_valid(const Graph& g, const Witness& w) {
  if (w.target >= g.size()) throw ValidationError("witness target out of range");
  if (w.args.size() > kMaxTableArity) throw ValidationError("witness arity exceeds the tabulation limit");
  if (w.table.size() != (std::size_t{1} << w.args.size())) throw ValidationError("witness table has the wrong length");
  std::vector<bool> seen(g.size(), false);
  for (VertexId a : w.args) {
    if (a >= g.size() || a == w.target || seen[a]) throw ValidationError("witness arguments are not distinct vertices other than the target");
    seen[a] = true;
  }
  if (auto z = witness_violation(g, w)) {
    throw ValidationError("witness for vertex " + std::to_string(w.target) + " (" + std::string(to_string(w.origin)) +
                          ") mispredicts vertex " + std::to_string(*z));
  }
}

std::size_t sd_pair(const Graph& g, VertexId x, VertexId y) {
  check_vertex(g, x);
  check_vertex(g, y);
  if (x == y) throw InvalidArgument("sd_pair needs two distinct vertices");
  auto rx = g.row(x);
  auto ry = g.row(y);
  std::size_t count = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) count += static_cast<std::size_t>(std::popcount(rx[i] ^ ry[i]));
  // x and y each show up in the XOR exactly when they are adjacent
  return g.adjacent(x, y) ? count - 2 : count;
}

std::size_t sd_graph(const Graph& g, const Limits& limits, Exec exec) {
  check_sweep_size(g, limits.sd_max_n, "sd_graph");
  if (g.size() <= 1) return 0;
  const auto mg = kernels::MaskGraph::from(g);
  return static_cast<std::size_t>(exec == Exec::serial ? kernels::sd_graph_serial(mg) : kernels::sd_graph_parallel(mg));
}

FunctionCheck is_function_of(const Graph& g, VertexId y, const VertexSet& args) {
  check_vertex(g, y);
  if (args.universe() != g.size()) throw InvalidArgument("argument set universe does not match graph");
  if (args.contains(y)) throw InvalidArgument("target vertex " + std::to_string(y) + " is in its own argument set");
  const auto s_words = args.words();

  // profile on S -> first vertex seen with that profile
  std::map<std::vector<std::uint64_t>, VertexId> first;
  std::vector<std::uint64_t> key(s_words.size());
  for (VertexId z = 0; z < g.size(); ++z) {
    if (z == y || args.contains(z)) continue;
    auto r = g.row(z);
    for (std::size_t i = 0; i < key.size(); ++i) key[i] = r[i] & s_words[i];
    auto [it, inserted] = first.try_emplace(key, z);
    if (!inserted && g.adjacent(y, it->second) != g.adjacent(y, z)) return {false, Edge{it->second, z}};
  }
  return {true, std::nullopt};
}

FunVertexResult fun_vertex(const Graph& g, VertexId y) {
  check_vertex(g, y);
  const auto mg = kernels::MaskGraph::from(g);
  const HittingSet hs(kernels::conflict_sets(mg, kernels::full_mask(mg.n), y));
  const std::uint64_t chosen = hs.lex_least_minimum();

  Witness w;
  w.target = y;
  w.origin = WitnessOrigin::exhaustive;
  for (std::uint64_t c = chosen; c != 0; c &= c - 1) w.args.push_back(static_cast<VertexId>(std::countr_zero(c)));
  if (w.args.size() > kMaxTableArity) throw SizeLimitError("witness arity too large to tabulate", kMaxTableArity);
  w.table.assign(std::size_t{1} << w.args.size(), false);
  for (VertexId z = 0; z < g.size(); ++z) {
    if (z == y || (chosen & kernels::bit(z)) != 0) continue;
    w.table[profile(g, z, w.args)] = g.adjacent(y, z);
  }
  require_valid(g, w);
  return {w.args.size(), std::move(w)};
}

std::size_t fun_graph(const Graph& g, const Limits& limits, Exec exec) {
  check_sweep_size(g, limits.fun_max_n, "fun_graph");
  if (g.size() <= 1) return 0;
  const auto mg = kernels::MaskGraph::from(g);
  return static_cast<std::size_t>(exec == Exec::serial ? kernels::fun_graph_serial(mg) : kernels::fun_graph_parallel(mg));
}

Witness pair_witness(const Graph& g, VertexId x, VertexId y, PairMode mode) {
  check_vertex(g, x);
  check_vertex(g, y);
  if (x == y) throw InvalidArgument("pair_witness needs two distinct vertices");
  Witness w;
  w.target = x;
  w.args.push_back(y);
  const bool want_distinguishers = mode == PairMode::distinguishers;
  for (VertexId z = 0; z < g.size(); ++z) {
    if (z == x || z == y) continue;
    const bool distinguishes = g.adjacent(z, x) != g.adjacent(z, y);
    if (distinguishes == want_distinguishers) w.args.push_back(z);
  }
  if (w.args.size() > kMaxTableArity) throw SizeLimitError("pair witness arity too large to tabulate", kMaxTableArity);
  w.origin = want_distinguishers ? WitnessOrigin::pair_distinguishers : WitnessOrigin::pair_nondistinguishers;
  w.table.resize(std::size_t{1} << w.args.size());
  for (std::size_t m = 0; m < w.table.size(); ++m) {
    const bool y_bit = (m & 1U) != 0;
    w.table[m] = want_distinguishers ? y_bit : !y_bit;
  }
  require_valid(g, w);
  return w;
}

PremiseReport check_refutation_premises(const Graph& g, std::size_t k, std::size_t p) {
  PremiseReport r;
  r.k = k;
  r.p = p;
  r.triangle_free = is_triangle_free(g);
  r.k2p_free = is_k2p_free(g, p);
  r.min_degree = g.min_degree();
  r.max_degree = g.max_degree();
  if (p < 2) r.violated.push_back("p >= 2");
  if (!r.triangle_free) r.violated.push_back("graph is not triangle-free");
  if (!r.k2p_free) r.violated.push_back("graph is not K_{2," + std::to_string(p) + "}-free");
  if (r.min_degree < k * p + 1) {
    r.violated.push_back("min degree " + std::to_string(r.min_degree) + " < kp+1 = " + std::to_string(k * p + 1));
  }
  const std::size_t n = g.size();
  if (n < k + 2 || (k + 1) * r.max_degree > n - k - 2) {
    r.violated.push_back("max degree " + std::to_string(r.max_degree) + " > (n-k-2)/(k+1) with n=" + std::to_string(n));
  }
  return r;
}

RefutationPair refute_function(const Graph& g, VertexId x, const VertexSet& s, std::size_t k, std::size_t p) {
  return refute_function(g, check_refutation_premises(g, k, p), x, s);
}

RefutationPair refute_function(const Graph& g, const PremiseReport& premises, VertexId x, const VertexSet& s) {
  check_vertex(g, x);
  if (s.universe() != g.size()) throw InvalidArgument("argument set universe does not match graph");
  if (s.count() != premises.k) throw InvalidArgument("|S| = " + std::to_string(s.count()) + " but k = " + std::to_string(premises.k));
  if (s.contains(x)) throw InvalidArgument("x belongs to S");
  if (!premises.ok()) throw PremiseError(premises.violated);

  // blocked = S together with every neighbour of S
  std::vector<std::uint64_t> blocked(s.words().begin(), s.words().end());
  for (VertexId v : s.members()) {
    auto r = g.row(v);
    for (std::size_t i = 0; i < blocked.size(); ++i) blocked[i] |= r[i];
  }
  std::optional<VertexId> u;
  std::optional<VertexId> w;
  for (VertexId z = 0; z < g.size() && !(u && w); ++z) {
    if (z == x || bit_at(blocked, z)) continue;
    if (g.adjacent(x, z)) {
      if (!u) u = z;
    } else if (!w) {
      w = z;
    }
  }
  if (!u || !w) throw ValidationError("refutation pair not found although the premises hold");
  return {*u, *w};
}

}  // namespace funbox
