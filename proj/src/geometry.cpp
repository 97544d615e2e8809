#include "funbox/geometry.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace funbox {
namespace {

Box box2(std::int64_t x0, std::int64_t x1, std::int64_t y0, std::int64_t y1) { return {{x0, x1}, {y0, y1}}; }

bool contains(const Box& b, const Point2& p) {
  return b[0].lo <= p.x && p.x <= b[0].hi && b[1].lo <= p.y && p.y <= b[1].hi;
}

RealizationReport make_report(const Graph& target, Graph realized, bool unit) {
  RealizationReport r;
  r.equal = equal_labeled(target, realized);
  r.target = target;
  r.realized = std::move(realized);
  r.unit = unit;
  if (!r.equal) {
    auto diff = first_difference(r.target, r.realized);
    throw ValidationError("realized graph differs from the target at pair (" + std::to_string(diff->first) + ", " +
                          std::to_string(diff->second) + ")");
  }
  return r;
}

std::vector<std::size_t> positions(const std::vector<VertexId>& order, std::size_t n) {
  std::vector<std::size_t> pos(n, 0);
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i + 1;
  return pos;
}

}  // namespace

void validate(const BoxSystem& bs) {
  if (bs.d < 1) throw InvalidArgument("box dimension must be at least 1");
  if (bs.scale_denominator <= 0) throw InvalidArgument("scale_denominator must be positive");
  for (std::size_t i = 0; i < bs.boxes.size(); ++i) {
    if (bs.boxes[i].size() != bs.d) throw InvalidArgument("box " + std::to_string(i) + " has the wrong dimension");
    for (const auto& r : bs.boxes[i])
      if (r.lo > r.hi) throw InvalidArgument("box " + std::to_string(i) + " has lo > hi");
  }
  if (!bs.labels.empty() && bs.labels.size() != bs.boxes.size()) throw InvalidArgument("box label count mismatch");
}

bool boxes_intersect(const Box& a, const Box& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!intersects(a[k], b[k])) return false;
  return true;
}

Graph graph_from_boxes(const BoxSystem& bs) {
  validate(bs);
  GraphBuilder b(bs.boxes.size());
  for (VertexId u = 0; u < bs.boxes.size(); ++u)
    for (VertexId v = u + 1; v < bs.boxes.size(); ++v)
      if (boxes_intersect(bs.boxes[u], bs.boxes[v])) b.add_edge(u, v);
  return std::move(b).build();
}

Graph incidence_graph(const std::vector<Point2>& points, const BoxSystem& boxes) {
  if (boxes.d != 2) throw InvalidArgument("point-box incidence needs planar boxes");
  validate(boxes);
  const std::size_t np = points.size();
  GraphBuilder b(np + boxes.boxes.size());
  for (std::size_t m = 0; m < boxes.boxes.size(); ++m)
    for (VertexId p = 0; p < np; ++p)
      if (contains(boxes.boxes[m], points[p])) b.add_edge(p, static_cast<VertexId>(np + m));
  return std::move(b).build();
}

PointBoxRealization realize_pointbox_plane(std::size_t n, std::size_t i) {
  const Construction target = point_box_incidence(n, i);
  const auto nn = static_cast<std::int64_t>(n);
  const std::int64_t refine = 2 * nn + 2;

  // level 1: one box around a column of n points; everything keeps a margin of 1
  std::vector<Point2> pts;
  for (std::int64_t c = 0; c < nn; ++c) pts.push_back({1, c + 1});
  std::vector<Box> boxes{box2(0, 2, 0, nn + 1)};

  for (std::size_t level = 2; level <= i; ++level) {
    std::int64_t max_x = 0;
    for (auto& p : pts) {
      p.x *= refine;
      p.y *= refine;
      max_x = std::max(max_x, p.x);
    }
    for (auto& b : boxes) {
      for (auto& r : b) {
        r.lo *= refine;
        r.hi *= refine;
      }
      max_x = std::max(max_x, b[0].hi);
    }
    if (max_x > std::numeric_limits<std::int64_t>::max() / (4 * refine * nn)) {
      throw SizeLimitError("plane realization coordinates would overflow", n);
    }
    const std::int64_t width = max_x + 2;

    std::vector<Point2> next_pts;
    std::vector<Box> next_boxes;
    next_pts.reserve(pts.size() * n);
    for (std::int64_t c = 0; c < nn; ++c) {
      for (const auto& p : pts) next_pts.push_back({p.x + c * width, p.y});
      for (const auto& b : boxes) next_boxes.push_back(box2(b[0].lo + c * width, b[0].hi + c * width, b[1].lo, b[1].hi));
    }
    // one new box per old point, holding its n copies; then spread the copies vertically
    const std::size_t prev = pts.size();
    for (std::size_t m = 0; m < prev; ++m) {
      const std::int64_t y = pts[m].y;
      const std::int64_t x_first = pts[m].x;
      const std::int64_t x_last = pts[m].x + (nn - 1) * width;
      next_boxes.push_back(box2(x_first - 1, x_last + 1, y - 1, y + nn));
    }
    for (std::int64_t c = 0; c < nn; ++c)
      for (std::size_t m = 0; m < prev; ++m) next_pts[static_cast<std::size_t>(c) * prev + m].y += c;
    pts = std::move(next_pts);
    boxes = std::move(next_boxes);
  }

  PointBoxRealization out;
  out.points = std::move(pts);
  out.boxes.d = 2;
  out.boxes.scale_denominator = 1;
  out.boxes.boxes = std::move(boxes);
  std::set<std::int64_t> heights;
  for (const auto& p : out.points) heights.insert(p.y);
  if (heights.size() != out.points.size()) throw ValidationError("plane realization left two points at one height");
  out.report = make_report(target.graph, incidence_graph(out.points, out.boxes), false);
  return out;
}

BoxSystem embed_pointbox_r3(const std::vector<Point2>& points, const BoxSystem& boxes) {
  if (boxes.d != 2) throw InvalidArgument("embed_pointbox_r3 needs planar boxes");
  validate(boxes);
  {
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    for (const auto& p : points)
      if (!seen.emplace(p.x, p.y).second) throw InvalidArgument("points are not pairwise distinct");
  }
  constexpr std::int64_t kScale = 3;
  constexpr std::int64_t kSafe = std::numeric_limits<std::int64_t>::max() / 8;
  auto scaled = [&](std::int64_t v) {
    if (v > kSafe || v < -kSafe) throw SizeLimitError("coordinate too large to rescale", static_cast<std::size_t>(kSafe));
    return v * kScale;
  };
  if (boxes.scale_denominator > kSafe) throw SizeLimitError("scale denominator too large to rescale", static_cast<std::size_t>(kSafe));

  BoxSystem out;
  out.d = 3;
  out.scale_denominator = boxes.scale_denominator * kScale;
  const auto nboxes = static_cast<std::int64_t>(boxes.boxes.size());
  const std::int64_t top = 3 * nboxes + 1;
  // a column [3x-1, 3x+1] meets [3lo, 3hi] exactly when lo <= x <= hi
  for (const auto& p : points) {
    out.boxes.push_back({{scaled(p.x) - 1, scaled(p.x) + 1}, {scaled(p.y) - 1, scaled(p.y) + 1}, {0, top}});
  }
  for (std::int64_t m = 0; m < nboxes; ++m) {
    const auto& b = boxes.boxes[static_cast<std::size_t>(m)];
    out.boxes.push_back({{scaled(b[0].lo), scaled(b[0].hi)}, {scaled(b[1].lo), scaled(b[1].hi)}, {3 * m, 3 * m + 1}});
  }

  const std::size_t np = points.size();
  for (std::size_t u = 0; u < out.boxes.size(); ++u) {
    for (std::size_t v = u + 1; v < out.boxes.size(); ++v) {
      if ((u < np) == (v < np) && boxes_intersect(out.boxes[u], out.boxes[v])) {
        throw ValidationError("R^3 embedding has two intersecting boxes on the same side");
      }
    }
  }
  const Graph realized = graph_from_boxes(out);
  if (!equal_labeled(realized, incidence_graph(points, boxes))) throw ValidationError("R^3 embedding changes the incidence graph");
  return out;
}

AbcParts abc_parts(const ConstructionLabels& labels) {
  return {labels.part(Part::a), labels.part(Part::b), labels.part(Part::c)};
}

AbcParts abc_parts_from_labels(const Graph& g) {
  if (!g.has_labels()) throw InvalidArgument("graph has no labels naming its A, B, C parts");
  AbcParts parts{VertexSet(g.size()), VertexSet(g.size()), VertexSet(g.size())};
  for (VertexId v = 0; v < g.size(); ++v) {
    const auto& lab = g.labels()[v];
    const char head = lab.empty() ? '?' : lab.front();
    switch (head) {
      case 'A': parts.a.insert(v); break;
      case 'B': parts.b.insert(v); break;
      case 'C': parts.c.insert(v); break;
      default: throw InvalidArgument("label '" + lab + "' of vertex " + std::to_string(v) + " names no ABC part");
    }
  }
  return parts;
}

UnitSquareRealization realize_abc_unit_squares(const Graph& g, const AbcParts& parts) {
  const AbcOrders orders = check_abc_partition(g, parts.a, parts.b, parts.c);
  const auto n = static_cast<std::int64_t>(orders.a.size());
  const std::int64_t side = 4 * n;
  const auto pos_a = positions(orders.a, g.size());
  const auto pos_b = positions(orders.b, g.size());
  const auto pos_bp = positions(orders.b_prime, g.size());
  const auto pos_c = positions(orders.c, g.size());

  UnitSquareRealization out;
  out.boxes.d = 2;
  out.boxes.scale_denominator = side;
  out.boxes.labels = g.labels();
  for (VertexId v = 0; v < g.size(); ++v) {
    std::int64_t x = 0;
    std::int64_t y = 0;
    if (parts.a.contains(v)) {
      const auto i = static_cast<std::int64_t>(pos_a[v]);
      x = -2 * i;
      y = -2 * i;
    } else if (parts.b.contains(v)) {
      // height realizes the A-B half graph, horizontal offset the B-C one
      x = -2 * static_cast<std::int64_t>(pos_bp[v]);
      y = side - 2 * static_cast<std::int64_t>(pos_b[v]) + 1;
    } else {
      const auto j = static_cast<std::int64_t>(pos_c[v]);
      x = side - 2 * j + 1;
      y = side + 2 * (n - j);
    }
    out.boxes.boxes.push_back(box2(x, x + side, y, y + side));
  }
  bool unit = true;
  for (const auto& b : out.boxes.boxes)
    for (const auto& r : b) unit = unit && (r.hi - r.lo == side);
  out.report = make_report(g, graph_from_boxes(out.boxes), unit);
  return out;
}

IntervalRealization realize_abc_intervals(const Graph& g, const AbcParts& parts) {
  const AbcOrders orders = check_abc_partition(g, parts.a, parts.b, parts.c);
  const auto n = static_cast<std::int64_t>(orders.a.size());
  const std::int64_t q = 100 * n;
  const auto pos_a = positions(orders.a, g.size());
  const auto pos_b = positions(orders.b, g.size());
  const auto pos_bp = positions(orders.b_prime, g.size());
  const auto pos_c = positions(orders.c, g.size());

  IntervalRealization out;
  out.rep.scale_denominator = 1;
  for (VertexId v = 0; v < g.size(); ++v) {
    if (parts.a.contains(v)) {
      out.rep.intervals.push_back({0, 10 * (n - static_cast<std::int64_t>(pos_a[v])) + 5});
    } else if (parts.b.contains(v)) {
      out.rep.intervals.push_back(
          {10 * (n - static_cast<std::int64_t>(pos_b[v])) + 8, q - 10 * static_cast<std::int64_t>(pos_bp[v])});
    } else {
      out.rep.intervals.push_back({q - 10 * static_cast<std::int64_t>(pos_c[v]) + 5, q + 10});
    }
  }
  out.report = make_report(g, graph_from_intervals(out.rep), false);
  return out;
}

}  // namespace funbox
