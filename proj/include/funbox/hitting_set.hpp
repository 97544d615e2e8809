#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace funbox {

/// Exact minimum hitting set over a universe of at most 64 elements.
///
/// Every requirement set is a bit mask; a hitting set must intersect all of them.
/// Search is branch and bound: a greedy cover gives the initial upper bound, a greedy
/// packing of pairwise disjoint sets gives the lower bound at each node, and branching
/// is include/exclude on the element contained in the most unhit sets.
class HittingSet {
 public:
  /// Duplicate sets and supersets of other sets are dropped. An empty requirement
  /// set makes the instance infeasible.
  explicit HittingSet(std::vector<std::uint64_t> sets);

  std::span<const std::uint64_t> sets() const { return sets_; }
  std::uint64_t universe() const { return universe_; }
  bool infeasible() const { return has_empty_; }

  /// Is there a hitting set drawn from `allowed` with at most `budget` elements?
  bool feasible(std::uint64_t allowed, int budget) const;
  bool feasible(int budget) const { return feasible(universe_, budget); }

  int greedy_upper_bound() const;
  int minimum() const;

  /// Among all minimum hitting sets, the one whose sorted element list is
  /// lexicographically least.
  std::uint64_t lex_least_minimum() const;

 private:
  std::vector<std::uint64_t> sets_;
  std::uint64_t universe_ = 0;
  bool has_empty_ = false;
};

}  // namespace funbox
