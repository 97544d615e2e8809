#include "funbox/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <bit>

#include "funbox/hitting_set.hpp"

namespace funbox::kernels {

MaskGraph MaskGraph::from(const Graph& g) {
  if (g.size() > kMaxVertices) throw SizeLimitError("mask kernels need at most 64 vertices", kMaxVertices);
  MaskGraph m;
  m.n = g.size();
  for (VertexId u = 0; u < g.size(); ++u) m.rows[u] = g.size() == 0 ? 0 : g.row(u)[0];
  return m;
}

std::vector<std::uint64_t> conflict_sets(const MaskGraph& g, std::uint64_t within, std::size_t y) {
  const std::uint64_t others = within & ~bit(y);
  const std::uint64_t adj = g.rows[y] & others;
  const std::uint64_t non_adj = others & ~g.rows[y];
  std::vector<std::uint64_t> sets;
  sets.reserve(static_cast<std::size_t>(std::popcount(adj) * std::popcount(non_adj)));
  for (std::uint64_t a = adj; a != 0; a &= a - 1) {
    const auto z = static_cast<std::size_t>(std::countr_zero(a));
    for (std::uint64_t b = non_adj; b != 0; b &= b - 1) {
      const auto w = static_cast<std::size_t>(std::countr_zero(b));
      sets.push_back(bit(z) | bit(w) | ((g.rows[z] ^ g.rows[w]) & others));
    }
  }
  return sets;
}

int fun_within(const MaskGraph& g, std::uint64_t within, std::size_t y) {
  return HittingSet(conflict_sets(g, within, y)).minimum();
}

int min_pair_sd(const MaskGraph& g, std::uint64_t within, int floor) {
  int best = 64;
  for (std::uint64_t a = within; a != 0; a &= a - 1) {
    const auto x = static_cast<std::size_t>(std::countr_zero(a));
    for (std::uint64_t b = a & (a - 1); b != 0; b &= b - 1) {
      const auto y = static_cast<std::size_t>(std::countr_zero(b));
      best = std::min(best, std::popcount(distinguishers(g, within, x, y)));
      if (best <= floor) return best;
    }
  }
  return best;
}

namespace {

// Returns the min pair sd of `within` if it exceeds `best`, otherwise `best`.
int sd_step(const MaskGraph& g, std::uint64_t within, int best) {
  const int size = std::popcount(within);
  if (size < 2 || size - 2 <= best) return best;
  const int value = min_pair_sd(g, within, best);
  return std::max(best, value);
}

// Returns min_y fun(y) over the subgraph `within` if it exceeds `best`, otherwise `best`.
int fun_step(const MaskGraph& g, std::uint64_t within, int best) {
  const int size = std::popcount(within);
  // fun(y) <= |H| - 2 by predicting the single remaining vertex with a constant
  if (size < 2 || size - 2 <= best) return best;

  // cheap bounds: fun(y) <= deg(y), fun(y) <= non-degree, fun(x) <= sd(x,y) + 1
  for (std::uint64_t a = within; a != 0; a &= a - 1) {
    const auto y = static_cast<std::size_t>(std::countr_zero(a));
    const int deg = std::popcount(g.rows[y] & within);
    if (std::min(deg, size - 1 - deg) <= best) return best;
  }
  if (min_pair_sd(g, within, best - 1) + 1 <= best) return best;

  std::vector<HittingSet> per_vertex;
  per_vertex.reserve(static_cast<std::size_t>(size));
  for (std::uint64_t a = within; a != 0; a &= a - 1) {
    per_vertex.emplace_back(conflict_sets(g, within, static_cast<std::size_t>(std::countr_zero(a))));
    if (per_vertex.back().feasible(best)) return best;
  }
  for (int budget = best + 1;; ++budget) {
    for (const auto& hs : per_vertex)
      if (hs.feasible(budget)) return budget;
  }
}

void raise_to(std::atomic<int>& target, int value) {
  int cur = target.load(std::memory_order_relaxed);
  while (value > cur && !target.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
  }
}

template <class Step>
int sweep_serial(const MaskGraph& g, Step step) {
  int best = 0;
  const std::uint64_t top = full_mask(g.n);
  for (std::uint64_t m = top; m != 0; --m) best = step(g, m, best);
  return best;
}

template <class Step>
int sweep_parallel(const MaskGraph& g, Step step) {
  std::atomic<int> best{0};
  const auto top = static_cast<long long>(full_mask(g.n));
#pragma omp parallel for schedule(dynamic, 256)
  for (long long i = top; i > 0; --i) {
    const int cur = best.load(std::memory_order_relaxed);
    const int next = step(g, static_cast<std::uint64_t>(i), cur);
    if (next > cur) raise_to(best, next);
  }
  return best.load();
}

}  // namespace

int sd_graph_serial(const MaskGraph& g) { return sweep_serial(g, sd_step); }
int sd_graph_parallel(const MaskGraph& g) { return sweep_parallel(g, sd_step); }
int fun_graph_serial(const MaskGraph& g) { return sweep_serial(g, fun_step); }
int fun_graph_parallel(const MaskGraph& g) { return sweep_parallel(g, fun_step); }

}  // namespace funbox::kernels
