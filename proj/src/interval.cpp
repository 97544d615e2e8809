#include "funbox/interval.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace funbox {

void validate(const IntervalRep& rep) {
  if (rep.intervals.empty()) throw InvalidArgument("interval model is empty");
  if (rep.scale_denominator <= 0) throw InvalidArgument("scale_denominator must be positive");
  for (std::size_t i = 0; i < rep.intervals.size(); ++i) {
    if (rep.intervals[i].lo > rep.intervals[i].hi) throw InvalidArgument("interval " + std::to_string(i) + " has l > r");
  }
}

void validate(const PointRep& rep) {
  const std::size_t n = rep.points.size();
  if (n == 0) throw InvalidArgument("point model is empty");
  std::vector<bool> used(2 * n + 1, false);
  auto take = [&](int c, std::size_t id) {
    if (c < 1 || static_cast<std::size_t>(c) > 2 * n || used[static_cast<std::size_t>(c)]) {
      throw InvalidArgument("point " + std::to_string(id) + " reuses or leaves the coordinate range 1..2n");
    }
    used[static_cast<std::size_t>(c)] = true;
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (rep.points[i].left >= rep.points[i].right) throw InvalidArgument("point " + std::to_string(i) + " is not above the diagonal");
    take(rep.points[i].left, i);
    take(rep.points[i].right, i);
  }
}

Graph graph_from_intervals(const IntervalRep& rep) {
  validate(rep);
  const std::size_t n = rep.intervals.size();
  GraphBuilder b(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (intersects(rep.intervals[u], rep.intervals[v])) b.add_edge(u, v);
  return std::move(b).build();
}

Graph graph_from_points(const PointRep& rep) {
  const std::size_t n = rep.points.size();
  GraphBuilder b(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      const auto& p = rep.points[u];
      const auto& q = rep.points[v];
      if (std::max(p.left, q.left) <= std::min(p.right, q.right)) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

PointRep normalize(const IntervalRep& rep) {
  validate(rep);
  struct Event {
    std::int64_t coord;
    int kind;  // 0 = left, 1 = right
    std::size_t id;
  };
  std::vector<Event> events;
  events.reserve(2 * rep.intervals.size());
  for (std::size_t i = 0; i < rep.intervals.size(); ++i) {
    events.push_back({rep.intervals[i].lo, 0, i});
    events.push_back({rep.intervals[i].hi, 1, i});
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    return std::tie(a.coord, a.kind, a.id) < std::tie(b.coord, b.kind, b.id);
  });
  PointRep out;
  out.points.resize(rep.intervals.size());
  for (std::size_t r = 0; r < events.size(); ++r) {
    auto& p = out.points[events[r].id];
    (events[r].kind == 0 ? p.left : p.right) = static_cast<int>(r + 1);
  }
  return out;
}

SdLemmaReport check_sd_lemma(const PointRep& rep) {
  validate(rep);
  const Graph g = graph_from_points(rep);
  SdLemmaReport report;
  for (VertexId u = 0; u < g.size(); ++u) {
    for (VertexId v = u + 1; v < g.size(); ++v) {
      ++report.pairs_checked;
      const std::size_t sd = sd_pair(g, u, v);
      const int dist = manhattan(rep.points[u], rep.points[v]);
      if (static_cast<long long>(sd) > dist - 2) {
        if (!report.violation) report.violation = SdLemmaViolation{u, v, sd, dist};
      }
    }
  }
  return report;
}

namespace {

int stripe(int coordinate) { return (coordinate - 1) / kStripeWidth; }

struct BlockKey {
  int row;  // stripe of the right endpoint (horizontal stripe)
  int col;  // stripe of the left endpoint (vertical stripe)
  friend auto operator<=>(const BlockKey&, const BlockKey&) = default;
};

BlockKey block_of(const GridPoint& p) { return {stripe(p.right), stripe(p.left)}; }

Witness small_n_witness(const Graph& g) {
  Witness w;
  w.target = 0;
  w.origin = WitnessOrigin::small_n;
  for (VertexId v = 1; v < g.size(); ++v) w.args.push_back(v);
  // no vertex remains to be predicted
  w.table.assign(std::size_t{1} << w.args.size(), false);
  return w;
}

// Every interval with an endpoint strictly between coordinates a and b.
void add_endpoints_between(const std::vector<std::pair<int, VertexId>>& owner, int a, int b, std::vector<VertexId>& out) {
  for (int c = std::min(a, b) + 1; c < std::max(a, b); ++c) out.push_back(owner[static_cast<std::size_t>(c)].second);
}

Witness stripe_case2_witness(const PointRep& rep, VertexId x, VertexId y, VertexId z) {
  const std::size_t n = rep.points.size();
  std::vector<std::pair<int, VertexId>> owner(2 * n + 1);
  for (VertexId v = 0; v < n; ++v) {
    owner[static_cast<std::size_t>(rep.points[v].left)] = {0, v};
    owner[static_cast<std::size_t>(rep.points[v].right)] = {1, v};
  }
  const auto& px = rep.points[x];
  std::vector<VertexId> extras;
  add_endpoints_between(owner, px.left, rep.points[y].left, extras);
  add_endpoints_between(owner, px.right, rep.points[z].right, extras);
  std::sort(extras.begin(), extras.end());
  extras.erase(std::unique(extras.begin(), extras.end()), extras.end());
  std::erase_if(extras, [&](VertexId v) { return v == x || v == y || v == z; });

  Witness w;
  w.target = x;
  w.origin = WitnessOrigin::stripe_case2;
  w.args = {y, z};
  w.args.insert(w.args.end(), extras.begin(), extras.end());
  w.table.resize(std::size_t{1} << w.args.size());
  for (std::size_t m = 0; m < w.table.size(); ++m) w.table[m] = (m & 3U) == 3U;
  return w;
}

}  // namespace

Witness find_low_fun_witness(const PointRep& rep) {
  validate(rep);
  const Graph g = graph_from_points(rep);
  const std::size_t n = rep.points.size();

  if (n <= 8) {
    Witness w = small_n_witness(g);
    require_valid(g, w);
    return w;
  }

  std::map<BlockKey, std::vector<VertexId>> blocks;
  for (VertexId v = 0; v < n; ++v) blocks[block_of(rep.points[v])].push_back(v);

  for (const auto& [key, members] : blocks) {
    if (members.size() >= 2) {
      // two points of one block are within Manhattan distance 8
      Witness w = pair_witness(g, members[0], members[1], PairMode::distinguishers);
      w.origin = WitnessOrigin::stripe_case1;
      require_valid(g, w);
      return w;
    }
  }

  std::map<int, int> leftmost_in_row;  // horizontal stripe -> leftmost non-empty vertical stripe
  std::map<int, int> topmost_in_col;   // vertical stripe -> topmost non-empty horizontal stripe
  for (const auto& [key, members] : blocks) {
    auto [lit, lnew] = leftmost_in_row.try_emplace(key.row, key.col);
    if (!lnew) lit->second = std::min(lit->second, key.col);
    auto [tit, tnew] = topmost_in_col.try_emplace(key.col, key.row);
    if (!tnew) tit->second = std::max(tit->second, key.row);
  }

  for (const auto& [key, members] : blocks) {
    if (leftmost_in_row.at(key.row) == key.col || topmost_in_col.at(key.col) == key.row) continue;
    const VertexId x = members.front();
    const auto& px = rep.points[x];
    std::optional<VertexId> y;  // nearest above in the same vertical stripe
    std::optional<VertexId> z;  // nearest to the left in the same horizontal stripe
    for (VertexId v = 0; v < n; ++v) {
      const auto& pv = rep.points[v];
      if (stripe(pv.left) == key.col && pv.right > px.right && (!y || pv.right < rep.points[*y].right)) y = v;
      if (stripe(pv.right) == key.row && pv.left < px.left && (!z || pv.left > rep.points[*z].left)) z = v;
    }
    if (!y || !z) throw ValidationError("non-marginal block lacks a vertex above or to the left");
    Witness w = stripe_case2_witness(rep, x, *y, *z);
    require_valid(g, w);
    return w;
  }
  throw ValidationError("no non-empty non-marginal block among " + std::to_string(n) + " points");
}

}  // namespace funbox
