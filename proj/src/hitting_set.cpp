#include "funbox/hitting_set.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

namespace funbox {
namespace {

int packing_bound(std::vector<std::uint64_t>& sets) {
  std::sort(sets.begin(), sets.end(),
            [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
  std::uint64_t used = 0;
  int bound = 0;
  for (auto s : sets) {
    if ((s & used) == 0) {
      used |= s;
      ++bound;
    }
  }
  return bound;
}

bool search(std::vector<std::uint64_t> sets, std::uint64_t allowed, int budget) {
  std::size_t kept = 0;
  for (auto s : sets) {
    s &= allowed;
    if (s == 0) return false;
    sets[kept++] = s;
  }
  sets.resize(kept);
  if (sets.empty()) return true;
  if (budget <= 0) return false;
  if (packing_bound(sets) > budget) return false;

  // a singleton must be taken; otherwise branch on the most frequent element
  int pick = -1;
  for (auto s : sets) {
    if (std::popcount(s) == 1) {
      pick = std::countr_zero(s);
      break;
    }
  }
  bool forced = pick >= 0;
  if (!forced) {
    std::array<int, 64> freq{};
    for (auto s : sets)
      for (std::uint64_t w = s; w != 0; w &= w - 1) ++freq[static_cast<std::size_t>(std::countr_zero(w))];
    pick = static_cast<int>(std::max_element(freq.begin(), freq.end()) - freq.begin());
  }
  const std::uint64_t e = std::uint64_t{1} << pick;

  std::vector<std::uint64_t> rest;
  rest.reserve(sets.size());
  for (auto s : sets)
    if ((s & e) == 0) rest.push_back(s);
  if (search(std::move(rest), allowed & ~e, budget - 1)) return true;
  if (forced) return false;
  return search(std::move(sets), allowed & ~e, budget);
}

}  // namespace

HittingSet::HittingSet(std::vector<std::uint64_t> sets) {
  std::sort(sets.begin(), sets.end(), [](std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  for (auto s : sets) {
    if (s == 0) has_empty_ = true;
    bool dominated = false;
    for (auto t : sets_) {
      if ((t & ~s) == 0) {
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      sets_.push_back(s);
      universe_ |= s;
    }
  }
}

bool HittingSet::feasible(std::uint64_t allowed, int budget) const {
  if (has_empty_) return false;
  return search(sets_, allowed, budget);
}

int HittingSet::greedy_upper_bound() const {
  if (has_empty_) throw std::logic_error("greedy bound of an infeasible hitting-set instance");
  std::vector<std::uint64_t> open(sets_.begin(), sets_.end());
  int size = 0;
  while (!open.empty()) {
    std::array<int, 64> freq{};
    for (auto s : open)
      for (std::uint64_t w = s; w != 0; w &= w - 1) ++freq[static_cast<std::size_t>(std::countr_zero(w))];
    auto e = std::uint64_t{1} << (std::max_element(freq.begin(), freq.end()) - freq.begin());
    std::erase_if(open, [e](std::uint64_t s) { return (s & e) != 0; });
    ++size;
  }
  return size;
}

int HittingSet::minimum() const {
  if (has_empty_) throw std::logic_error("minimum of an infeasible hitting-set instance");
  std::vector<std::uint64_t> scratch(sets_.begin(), sets_.end());
  const int lower = packing_bound(scratch);
  const int upper = greedy_upper_bound();
  for (int b = lower; b < upper; ++b)
    if (feasible(b)) return b;
  return upper;
}

std::uint64_t HittingSet::lex_least_minimum() const {
  const int k = minimum();
  std::uint64_t chosen = 0;
  int last = -1;
  for (int slot = 0; slot < k; ++slot) {
    bool placed = false;
    for (int e = last + 1; e < 64 && !placed; ++e) {
      const std::uint64_t bit = std::uint64_t{1} << e;
      if ((universe_ & bit) == 0) continue;
      std::vector<std::uint64_t> open;
      for (auto s : sets_)
        if ((s & (chosen | bit)) == 0) open.push_back(s);
      const std::uint64_t above = e == 63 ? 0 : ~((bit << 1) - 1);
      if (search(std::move(open), universe_ & above, k - slot - 1)) {
        chosen |= bit;
        last = e;
        placed = true;
      }
    }
    if (!placed) throw std::logic_error("lexicographic reconstruction lost feasibility");
  }
  return chosen;
}

}  // namespace funbox
