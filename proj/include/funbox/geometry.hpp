#pragma once

// Exact box systems and the geometric realizations of the constructions. All
// coordinates are integers over one shared denominator; intersection tests
// never touch floating point.

#include <cstdint>
#include <string>
#include <vector>

#include "funbox/constructions.hpp"
#include "funbox/graph.hpp"
#include "funbox/interval.hpp"
#include "funbox/parameters.hpp"

namespace funbox {

/// Closed axis-parallel box: one range per dimension.
using Box = std::vector<ClosedRange>;

struct BoxSystem {
  std::size_t d = 1;
  std::int64_t scale_denominator = 1;
  std::vector<Box> boxes;
  std::vector<std::string> labels;
};

void validate(const BoxSystem& bs);

bool boxes_intersect(const Box& a, const Box& b);

/// Edge iff the closed boxes overlap in every coordinate.
Graph graph_from_boxes(const BoxSystem& bs);

struct RealizationReport {
  Graph target;
  Graph realized;
  bool equal = false;
  /// Every box has all sides equal to the denominator (only meaningful when unit boxes are claimed).
  bool unit = false;
};

struct Point2 {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

struct PointBoxRealization {
  std::vector<Point2> points;  ///< share the denominator of `boxes`
  BoxSystem boxes;             ///< d = 2
  RealizationReport report;
};

/// Incidence graph: points first, then boxes; point p ~ box b iff b contains p.
Graph incidence_graph(const std::vector<Point2>& points, const BoxSystem& boxes);

/// Plane realization of H^n_i built level by level; each level scales the grid
/// by 2n + 2 so the vertical shifts stay inside their boxes.
PointBoxRealization realize_pointbox_plane(std::size_t n, std::size_t i);

/// Turns a plane point-box instance into boxes in R^3: each box becomes a thin
/// slab at its own height and each point a vertical column through all slabs.
/// Vertex order: points first, then boxes.
BoxSystem embed_pointbox_r3(const std::vector<Point2>& points, const BoxSystem& boxes);

struct AbcParts {
  VertexSet a;
  VertexSet b;
  VertexSet c;
};

AbcParts abc_parts(const ConstructionLabels& labels);
/// Parts read from graph labels whose first character is 'A', 'B' or 'C'.
AbcParts abc_parts_from_labels(const Graph& g);

struct UnitSquareRealization {
  BoxSystem boxes;
  RealizationReport report;
};

/// Unit squares of side 4n (denominator 4n): A below, B above A, C to the right.
UnitSquareRealization realize_abc_unit_squares(const Graph& g, const AbcParts& parts);

struct IntervalRealization {
  IntervalRep rep;
  RealizationReport report;
};

/// a_i = [0, 10(n-i)+5], b = [10(n-j)+8, Q-10m] for A-B position j and B-C
/// position m, c_j = [Q-10j+5, Q+10] with Q = 100n.
IntervalRealization realize_abc_intervals(const Graph& g, const AbcParts& parts);

}  // namespace funbox
