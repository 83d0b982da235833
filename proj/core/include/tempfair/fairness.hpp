#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tempfair/instance.hpp"
#include "tempfair/laminar_family.hpp"

namespace tempfair {

enum class Predicate {
  EF,
  EF1,
  EFX,
  PROP,
  PROP1,
  SD_EF,
  SD_EF1,
  SD_PROP1,
  PO,
  BALANCED,
};

std::string_view to_string(Predicate predicate);
std::optional<Predicate> predicate_from_string(std::string_view name);

/// The family of good sets a temporal predicate quantifies over: each day,
/// the whole set, every prefix of days, or an explicit laminar family.
class Scope {
 public:
  enum class Kind { PerDay, Overall, UpToEachDay, Laminar };

  static Scope per_day() { return Scope(Kind::PerDay); }
  static Scope overall() { return Scope(Kind::Overall); }
  static Scope up_to_each_day() { return Scope(Kind::UpToEachDay); }
  static Scope laminar(LaminarFamily family);

  Kind kind() const { return kind_; }
  const LaminarFamily& family() const;
  std::vector<std::vector<GoodId>> sets(const TemporalInstance& instance) const;
  std::string describe() const;

 private:
  explicit Scope(Kind kind) : kind_(kind) {}
  Kind kind_ = Kind::Overall;
  LaminarFamily family_;
};

struct Violation {
  std::vector<GoodId> set;  // the good set on which the predicate failed
  Predicate predicate = Predicate::EF;
  int agent = -1;               // the envious / short-changed agent
  std::optional<int> other;     // the envied agent, for pairwise predicates
  std::optional<GoodId> good;   // witnessing good, when one exists
  std::string note;
};

struct FairnessReport {
  bool passed = true;
  std::vector<Violation> violations;

  void merge(FairnessReport other);
};

struct CheckOptions {
  /// Cap on the n^|S| alternatives scanned by the PO check; exceeding it
  /// raises ResourceLimitError rather than guessing.
  std::uint64_t po_search_budget = 2'000'000;
  /// Stop at the first violation instead of collecting all of them.
  bool first_violation_only = false;
};

/// X dominates Y for the agent: every head set of S holds at least as many
/// goods of X as of Y. X and Y must be subsets of S.
bool sd_dominates(const TemporalInstance& instance, int agent,
                  std::span<const GoodId> x, std::span<const GoodId> y,
                  std::span<const GoodId> set);

/// Evaluates one predicate on the restriction of `allocation` to `set`.
/// The allocation must cover `set`. PO is decided by exhaustive search over
/// all alternative allocations of `set`, guarded by the options budget.
FairnessReport check(const TemporalInstance& instance, const Allocation& allocation,
                     std::span<const GoodId> set, Predicate predicate,
                     const CheckOptions& options = {});

/// Conjunction of `check` over every set of the scope; the allocation must
/// be total on M. Violations from all sets are aggregated.
FairnessReport check_temporal(const TemporalInstance& instance,
                              const Allocation& allocation, Predicate predicate,
                              const Scope& scope, const CheckOptions& options = {});

/// Whether handing out both allocations of the pair at once would be exactly
/// envy-free for both agents. Two-agent instances only.
bool cancel_out(const TemporalInstance& instance, const AllocationPair& pair);

enum class CountCondition { Sufficiency, Necessity };

/// The counting conditions for SD-EF1 over top sets: sufficiency is
/// |A_i cap T_i(S,r)| >= |A_j cap T_i(S,r)| - 1 for all i, j, r; necessity is
/// |A_i cap T_i(S,r)| >= floor(r/n), checked only at ranks where the top set
/// is strictly preferred to the rest (tied boundaries are skipped).
bool sdef1_count_conditions(const TemporalInstance& instance,
                            const Allocation& allocation,
                            std::span<const GoodId> set, CountCondition condition);

}  // namespace tempfair
