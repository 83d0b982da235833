#pragma once

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tempfair/rational.hpp"

namespace tempfair {

/// Identifies a good by arrival day (1-based) and position within that day
/// (0-based). The (day, index) lexicographic order doubles as the global
/// tiebreak order shared by every agent: whenever two goods are worth the
/// same to an agent, the smaller GoodId is treated as preferred.
struct GoodId {
  int day = 1;
  int index = 0;

  friend constexpr auto operator<=>(const GoodId&, const GoodId&) = default;
};

/// Renders "d<day>#<index>", e.g. "d2#0".
std::string to_string(GoodId id);

struct RestrictionFlags {
  bool two_agents = false;
  bool identical_orderings = false;
  bool identical_days = false;
};

/// A temporal fair division instance: n agents, goods partitioned over k
/// days, and a nonnegative exact-rational value for every (agent, good)
/// pair. Immutable after construction; per-agent strict rankings and value
/// classes are precomputed so ordinal queries never touch rationals.
class TemporalInstance {
 public:
  /// `days[t][j]` holds the n values (one per agent) of the j-th good of day
  /// t+1. Rejects empty days, missing values, and negative values.
  TemporalInstance(int agent_count,
                   std::vector<std::vector<std::vector<Rational>>> days);

  int agent_count() const { return agents_; }
  int day_count() const { return static_cast<int>(day_sizes_.size()); }
  int day_size(int day) const;  // day is 1-based
  int good_count() const { return total_; }

  bool contains(GoodId id) const;
  /// Position of `id` in the global (day, index) order; throws when absent.
  int flat_index(GoodId id) const;
  GoodId good_at(int flat) const;

  const Rational& value(int agent, GoodId id) const;
  Rational bundle_value(int agent, std::span<const GoodId> goods) const;

  std::vector<GoodId> day_goods(int day) const;
  std::vector<GoodId> all_goods() const;

  /// Strict 0-based rank of `id` in agent's ordering over all of M, with the
  /// global tiebreak applied. Rank 0 is the most preferred good.
  int global_rank(int agent, GoodId id) const;
  /// 0-based index of `id`'s value class for the agent (class 0 has the
  /// highest value). Two goods share a class iff the agent values them
  /// equally, so weakly-preferred comparisons reduce to class comparisons.
  int value_class(int agent, GoodId id) const;

 private:
  int agents_ = 0;
  int total_ = 0;
  std::vector<int> day_sizes_;
  std::vector<int> day_offsets_;
  std::vector<std::vector<Rational>> values_;  // [agent][flat]
  std::vector<std::vector<int>> rank_;         // [agent][flat]
  std::vector<std::vector<int>> class_;        // [agent][flat]
};

/// An agent's strict ranking (value descending, GoodId ascending among ties)
/// over some set of goods.
struct PreferenceOrdering {
  int agent = 0;
  std::vector<GoodId> ranked;
};

/// A total assignment of a set of goods to agents. Entries are kept sorted
/// by GoodId; the assigned set ("domain") may be any subset of M.
class Allocation {
 public:
  Allocation() = default;
  /// Rejects duplicate goods and negative agent ids.
  explicit Allocation(std::vector<std::pair<GoodId, int>> owners);
  static Allocation from_bundles(const std::vector<std::vector<GoodId>>& bundles);
  /// Concatenates allocations with pairwise-disjoint domains.
  static Allocation merged(std::span<const Allocation> parts);

  bool empty() const { return entries_.empty(); }
  int size() const { return static_cast<int>(entries_.size()); }
  const std::vector<std::pair<GoodId, int>>& entries() const { return entries_; }

  bool contains(GoodId id) const;
  int owner(GoodId id) const;  // throws when absent
  std::vector<GoodId> goods() const;
  std::vector<GoodId> bundle(int agent) const;
  std::vector<std::vector<GoodId>> bundles(int agent_count) const;

  /// Restriction A_S: keeps exactly the entries for goods in `subset`.
  /// Every member of `subset` must be present.
  Allocation restricted_to(std::span<const GoodId> subset) const;

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  std::vector<std::pair<GoodId, int>> entries_;
};

/// Two allocations over the same good set, e.g. the two orientations of a
/// partition used by the two-agent constructions.
struct AllocationPair {
  Allocation first;
  Allocation second;
};

/// Sorts `goods` into set form (GoodId ascending), rejecting duplicates and
/// goods outside the instance.
std::vector<GoodId> normalize_good_set(const TemporalInstance& instance,
                                       std::span<const GoodId> goods);

PreferenceOrdering preference_ordering(const TemporalInstance& instance,
                                       int agent,
                                       std::span<const GoodId> goods);

/// The `count` most preferred goods of `goods` for the agent, as a sorted
/// set. Deterministic under the global tiebreak.
std::vector<GoodId> top_set(const TemporalInstance& instance, int agent,
                            std::span<const GoodId> goods, int count);

/// Every good of `goods` the agent weakly prefers to `pivot`; `pivot` must
/// be a member and is always included.
std::vector<GoodId> head_set(const TemporalInstance& instance, int agent,
                             std::span<const GoodId> goods, GoodId pivot);

/// Union of days 1..day.
std::vector<GoodId> prefix_goods(const TemporalInstance& instance, int day);

/// Detects the restrictions an instance satisfies. Identical orderings are
/// compared as weak orders (value classes), identical days by comparing each
/// day's sorted per-agent value vectors.
RestrictionFlags classify(const TemporalInstance& instance);

}  // namespace tempfair
