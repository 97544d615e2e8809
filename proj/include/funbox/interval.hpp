#pragma once

// Interval models, their endpoint-rank grid form, and the constructive
// functionality-8 witness for interval graphs.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <vector>

#include "funbox/graph.hpp"
#include "funbox/parameters.hpp"

namespace funbox {

/// Closed range [lo, hi] of scaled integers.
struct ClosedRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  friend bool operator==(const ClosedRange&, const ClosedRange&) = default;
};

inline bool intersects(const ClosedRange& a, const ClosedRange& b) { return std::max(a.lo, b.lo) <= std::min(a.hi, b.hi); }

/// Intervals with coordinates integer / scale_denominator.
struct IntervalRep {
  std::int64_t scale_denominator = 1;
  std::vector<ClosedRange> intervals;
};

/// Interval with endpoints relabeled to ranks 1..2n, every rank used once.
struct GridPoint {
  int left = 0;
  int right = 0;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

struct PointRep {
  std::vector<GridPoint> points;
};

/// Throws InvalidArgument unless lo <= hi everywhere and the list is nonempty.
void validate(const IntervalRep& rep);
/// Throws InvalidArgument unless the points use each of 1..2n exactly once with left < right.
void validate(const PointRep& rep);

Graph graph_from_intervals(const IntervalRep& rep);
Graph graph_from_points(const PointRep& rep);

/// Ranks all 2n endpoints. Ties: by coordinate, then left endpoints before right
/// endpoints, then by interval id, which keeps touching closed intervals adjacent.
PointRep normalize(const IntervalRep& rep);

inline int manhattan(const GridPoint& a, const GridPoint& b) {
  return std::abs(a.left - b.left) + std::abs(a.right - b.right);
}

struct SdLemmaViolation {
  VertexId u = 0;
  VertexId v = 0;
  std::size_t sd = 0;
  int manhattan = 0;
};

struct SdLemmaReport {
  std::size_t pairs_checked = 0;
  std::optional<SdLemmaViolation> violation;
};

/// Checks sd(u, v) <= manhattan(u, v) - 2 for every pair; reports the first failure.
SdLemmaReport check_sd_lemma(const PointRep& rep);

/// Coordinates 1..2n are cut into consecutive stripes of this many lines.
inline constexpr int kStripeWidth = 5;

/// A validated witness with at most 8 arguments (at most 7 below 9 vertices or
/// when a block holds two points). Throws ValidationError if the construction
/// ever fails to validate.
Witness find_low_fun_witness(const PointRep& rep);

}  // namespace funbox
