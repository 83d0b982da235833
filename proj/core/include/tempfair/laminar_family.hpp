#pragma once

#include <span>
#include <vector>

#include "tempfair/instance.hpp"

namespace tempfair {

/// A laminar family over a set of goods: any two member sets are either
/// disjoint or nested. Member sets are stored sorted (by GoodId) and the
/// family itself is kept in a canonical order (size descending, then
/// lexicographic), with duplicates collapsed and empty sets dropped.
class LaminarFamily {
 public:
  LaminarFamily() = default;
  /// Throws invalid_argument naming the first violating pair when two sets
  /// overlap without nesting.
  explicit LaminarFamily(std::vector<std::vector<GoodId>> sets);

  const std::vector<std::vector<GoodId>>& sets() const { return sets_; }
  int size() const { return static_cast<int>(sets_.size()); }
  bool contains_set(const std::vector<GoodId>& set) const;

  friend bool operator==(const LaminarFamily&, const LaminarFamily&) = default;

 private:
  std::vector<std::vector<GoodId>> sets_;
};

/// Completes a family over the ground set: adds the ground set if missing,
/// and for every set whose descendants cover part of it, the uncovered
/// remainder. The result has the ground set as root and every non-leaf
/// partitioned exactly by its children; its size is at most 2|ground| - 1.
LaminarFamily complete_family(const LaminarFamily& family,
                              std::span<const GoodId> ground);

/// Children (maximal proper subsets) of each set, as indices into sets().
/// Meaningful for complete families.
std::vector<std::vector<int>> family_children(const LaminarFamily& family);

/// Indices of sets() ordered so no set precedes any of its descendants.
/// Deterministic: children are visited in order of their smallest good.
std::vector<int> topological_order(const LaminarFamily& family);

}  // namespace tempfair
