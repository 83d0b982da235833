#include "tempfair/fairness.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "tempfair/errors.hpp"

namespace tempfair {

namespace {

std::string set_to_string(std::span<const GoodId> set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i > 0) out += ",";
    out += to_string(set[i]);
  }
  return out + "}";
}

bool member(std::span<const GoodId> sorted, GoodId id) {
  return std::binary_search(sorted.begin(), sorted.end(), id);
}

int integer_ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

std::string_view to_string(Predicate predicate) {
  switch (predicate) {
    case Predicate::EF: return "ef";
    case Predicate::EF1: return "ef1";
    case Predicate::EFX: return "efx";
    case Predicate::PROP: return "prop";
    case Predicate::PROP1: return "prop1";
    case Predicate::SD_EF: return "sd-ef";
    case Predicate::SD_EF1: return "sd-ef1";
    case Predicate::SD_PROP1: return "sd-prop1";
    case Predicate::PO: return "po";
    case Predicate::BALANCED: return "balanced";
  }
  return "?";
}

std::optional<Predicate> predicate_from_string(std::string_view name) {
  std::string key;
  for (char c : name)
    key += (c == '_') ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (key == "ef") return Predicate::EF;
  if (key == "ef1") return Predicate::EF1;
  if (key == "efx") return Predicate::EFX;
  if (key == "prop") return Predicate::PROP;
  if (key == "prop1") return Predicate::PROP1;
  if (key == "sd-ef") return Predicate::SD_EF;
  if (key == "sd-ef1") return Predicate::SD_EF1;
  if (key == "sd-prop1") return Predicate::SD_PROP1;
  if (key == "po") return Predicate::PO;
  if (key == "balanced") return Predicate::BALANCED;
  return std::nullopt;
}

Scope Scope::laminar(LaminarFamily family) {
  Scope scope(Kind::Laminar);
  scope.family_ = std::move(family);
  return scope;
}

const LaminarFamily& Scope::family() const {
  if (kind_ != Kind::Laminar)
    throw std::logic_error("scope carries no laminar family");
  return family_;
}

std::vector<std::vector<GoodId>> Scope::sets(const TemporalInstance& instance) const {
  std::vector<std::vector<GoodId>> out;
  switch (kind_) {
    case Kind::PerDay:
      for (int t = 1; t <= instance.day_count(); ++t) out.push_back(instance.day_goods(t));
      break;
    case Kind::Overall:
      out.push_back(instance.all_goods());
      break;
    case Kind::UpToEachDay:
      for (int t = 1; t <= instance.day_count(); ++t) out.push_back(prefix_goods(instance, t));
      break;
    case Kind::Laminar:
      out = family_.sets();
      break;
  }
  return out;
}

std::string Scope::describe() const {
  switch (kind_) {
    case Kind::PerDay: return "per-day";
    case Kind::Overall: return "overall";
    case Kind::UpToEachDay: return "up-to-each-day";
    case Kind::Laminar: return "laminar";
  }
  return "?";
}

void FairnessReport::merge(FairnessReport other) {
  passed = passed && other.passed;
  violations.insert(violations.end(),
                    std::make_move_iterator(other.violations.begin()),
                    std::make_move_iterator(other.violations.end()));
}

bool sd_dominates(const TemporalInstance& instance, int agent,
                  std::span<const GoodId> x, std::span<const GoodId> y,
                  std::span<const GoodId> set) {
  const auto s = normalize_good_set(instance, set);
  const auto xs = normalize_good_set(instance, x);
  const auto ys = normalize_good_set(instance, y);
  for (const GoodId g : xs)
    if (!member(s, g))
      throw std::invalid_argument("sd_dominates: " + to_string(g) + " outside the set");
  for (const GoodId g : ys)
    if (!member(s, g))
      throw std::invalid_argument("sd_dominates: " + to_string(g) + " outside the set");

  // Walking the agent's ranking of S, the distinct head sets are exactly the
  // prefixes ending at value-class boundaries.
  const auto ranked = preference_ordering(instance, agent, s).ranked;
  int in_x = 0;
  int in_y = 0;
  for (std::size_t pos = 0; pos < ranked.size(); ++pos) {
    in_x += member(xs, ranked[pos]) ? 1 : 0;
    in_y += member(ys, ranked[pos]) ? 1 : 0;
    const bool boundary =
        pos + 1 == ranked.size() ||
        instance.value_class(agent, ranked[pos + 1]) !=
            instance.value_class(agent, ranked[pos]);
    if (boundary && in_x < in_y) return false;
  }
  return true;
}

namespace {

struct CheckContext {
  const TemporalInstance& instance;
  const std::vector<GoodId>& set;
  const Allocation& allocation;  // already restricted to `set`
  std::vector<std::vector<GoodId>> bundles;
  Predicate predicate;
  const CheckOptions& options;
  FairnessReport report;

  int n() const { return instance.agent_count(); }

  bool done() const {
    return options.first_violation_only && !report.violations.empty();
  }

  void fail(int agent, std::optional<int> other, std::optional<GoodId> good,
            std::string note) {
    report.passed = false;
    report.violations.push_back(Violation{
        set, predicate, agent, other, good, std::move(note)});
  }
};

void check_ef(CheckContext& ctx) {
  for (int i = 0; i < ctx.n() && !ctx.done(); ++i) {
    const Rational own = ctx.instance.bundle_value(i, ctx.bundles[i]);
    for (int j = 0; j < ctx.n(); ++j) {
      if (i == j) continue;
      const Rational other = ctx.instance.bundle_value(i, ctx.bundles[j]);
      if (other > own)
        ctx.fail(i, j, std::nullopt,
                 "agent values the other bundle " + format_rational(other) +
                     " against own " + format_rational(own));
    }
  }
}

void check_ef1_or_efx(CheckContext& ctx) {
  const bool any_good = ctx.predicate == Predicate::EFX;
  for (int i = 0; i < ctx.n() && !ctx.done(); ++i) {
    const Rational own = ctx.instance.bundle_value(i, ctx.bundles[i]);
    for (int j = 0; j < ctx.n(); ++j) {
      if (i == j || ctx.bundles[j].empty()) continue;
      const Rational other = ctx.instance.bundle_value(i, ctx.bundles[j]);
      // EF1 removes the best good for i, EFX must survive removing any good,
      // i.e. the one i values least.
      GoodId pivot = ctx.bundles[j].front();
      for (const GoodId g : ctx.bundles[j]) {
        const bool better = ctx.instance.value(i, g) > ctx.instance.value(i, pivot);
        const bool worse = ctx.instance.value(i, g) < ctx.instance.value(i, pivot);
        if (any_good ? worse : better) pivot = g;
      }
      if (other - ctx.instance.value(i, pivot) > own)
        ctx.fail(i, j, pivot,
                 "removing " + to_string(pivot) + " leaves envy of " +
                     format_rational(other - ctx.instance.value(i, pivot) - own));
    }
  }
}

void check_prop(CheckContext& ctx) {
  for (int i = 0; i < ctx.n() && !ctx.done(); ++i) {
    const Rational share = ctx.instance.bundle_value(i, ctx.set) / ctx.n();
    const Rational own = ctx.instance.bundle_value(i, ctx.bundles[i]);
    if (own < share)
      ctx.fail(i, std::nullopt, std::nullopt,
               "holds " + format_rational(own) + " of a " + format_rational(share) +
                   " proportional share");
  }
}

void check_prop1(CheckContext& ctx) {
  for (int i = 0; i < ctx.n() && !ctx.done(); ++i) {
    if (ctx.bundles[i].size() == ctx.set.size()) continue;  // holds everything
    const Rational share = ctx.instance.bundle_value(i, ctx.set) / ctx.n();
    const Rational own = ctx.instance.bundle_value(i, ctx.bundles[i]);
    std::optional<Rational> best;
    std::optional<GoodId> best_good;
    const auto sorted_own = ctx.allocation.bundle(i);
    for (const GoodId g : ctx.set) {
      if (member(sorted_own, g)) continue;
      const Rational& v = ctx.instance.value(i, g);
      if (!best || v > *best) {
        best = v;
        best_good = g;
      }
    }
    if (own + *best < share)
      ctx.fail(i, std::nullopt, best_good,
               "even with " + to_string(*best_good) + " the bundle is worth " +
                   format_rational(own + *best) + " of a " + format_rational(share) +
                   " share");
  }
}

void check_sd_ef(CheckContext& ctx) {
  for (int i = 0; i < ctx.n() && !ctx.done(); ++i)
    for (int j = 0; j < ctx.n(); ++j) {
      if (i == j) continue;
      if (!sd_dominates(ctx.instance, i, ctx.bundles[i], ctx.bundles[j], ctx.set))
        ctx.fail(i, j, std::nullopt, "bundle does not stochastically dominate");
    }
}

void check_sd_ef1(CheckContext& ctx) {
  for (int i = 0; i < ctx.n() && !ctx.done(); ++i)
    for (int j = 0; j < ctx.n(); ++j) {
      if (i == j || ctx.bundles[j].empty()) continue;
      bool ok = false;
      for (const GoodId removed : ctx.bundles[j]) {
        std::vector<GoodId> rest;
        rest.reserve(ctx.bundles[j].size() - 1);
        for (const GoodId g : ctx.bundles[j])
          if (g != removed) rest.push_back(g);
        if (sd_dominates(ctx.instance, i, ctx.bundles[i], rest, ctx.set)) {
          ok = true;
          break;
        }
      }
      if (!ok)
        ctx.fail(i, j, std::nullopt,
                 "no single removal makes the bundle stochastically dominated");
    }
}

void check_sd_prop1(CheckContext& ctx) {
  for (int i = 0; i < ctx.n() && !ctx.done(); ++i) {
    if (ctx.bundles[i].size() == ctx.set.size()) continue;
    const auto ranked = preference_ordering(ctx.instance, i, ctx.set).ranked;
    const auto own = ctx.allocation.bundle(i);
    bool ok = false;
    for (const GoodId extra : ctx.set) {
      if (member(own, extra)) continue;
      // Head sets of S are the class-boundary prefixes of the ranking.
      int count = 0;
      bool valid = true;
      for (std::size_t pos = 0; pos < ranked.size() && valid; ++pos) {
        if (member(own, ranked[pos]) || ranked[pos] == extra) ++count;
        const bool boundary =
            pos + 1 == ranked.size() ||
            ctx.instance.value_class(i, ranked[pos + 1]) !=
                ctx.instance.value_class(i, ranked[pos]);
        if (boundary &&
            count < integer_ceil_div(static_cast<int>(pos) + 1, ctx.n()))
          valid = false;
      }
      if (valid) {
        ok = true;
        break;
      }
    }
    if (!ok)
      ctx.fail(i, std::nullopt, std::nullopt,
               "no single added good reaches every ceil(|head set|/n) quota");
  }
}

void check_po(CheckContext& ctx) {
  const int n = ctx.n();
  const int m = static_cast<int>(ctx.set.size());
  std::uint64_t space = 1;
  for (int j = 0; j < m; ++j) {
    if (space > ctx.options.po_search_budget / static_cast<std::uint64_t>(n)) {
      throw ResourceLimitError(
          "po check over " + std::to_string(m) + " goods and " + std::to_string(n) +
          " agents exceeds the budget of " + std::to_string(ctx.options.po_search_budget) +
          " allocations");
    }
    space *= static_cast<std::uint64_t>(n);
  }

  std::vector<Rational> base(n);
  for (int i = 0; i < n; ++i) base[i] = ctx.instance.bundle_value(i, ctx.bundles[i]);

  std::vector<int> digits(m, 0);
  std::vector<Rational> own(n, Rational(0));
  for (int j = 0; j < m; ++j) own[0] += ctx.instance.value(0, ctx.set[j]);

  const auto dominates = [&]() {
    bool strict = false;
    for (int i = 0; i < n; ++i) {
      if (own[i] < base[i]) return false;
      if (own[i] > base[i]) strict = true;
    }
    return strict;
  };

  while (true) {
    if (dominates()) {
      int gainer = 0;
      for (int i = 0; i < n; ++i)
        if (own[i] > base[i]) gainer = i;
      std::string moved;
      for (int j = 0; j < m; ++j)
        if (digits[j] != ctx.allocation.owner(ctx.set[j]))
          moved += (moved.empty() ? "" : ",") + to_string(ctx.set[j]) + "->" +
                   std::to_string(digits[j] + 1);
      ctx.fail(gainer, std::nullopt, std::nullopt,
               "dominated by moving " + moved);
      return;
    }
    int j = 0;
    while (j < m) {
      const GoodId g = ctx.set[j];
      own[digits[j]] -= ctx.instance.value(digits[j], g);
      if (++digits[j] < n) {
        own[digits[j]] += ctx.instance.value(digits[j], g);
        break;
      }
      digits[j] = 0;
      own[0] += ctx.instance.value(0, g);
      ++j;
    }
    if (j == m) break;
  }
}

void check_balanced(CheckContext& ctx) {
  int lo = 0;
  int hi = 0;
  for (int i = 1; i < ctx.n(); ++i) {
    if (ctx.bundles[i].size() < ctx.bundles[lo].size()) lo = i;
    if (ctx.bundles[i].size() > ctx.bundles[hi].size()) hi = i;
  }
  if (ctx.bundles[hi].size() > ctx.bundles[lo].size() + 1)
    ctx.fail(lo, hi, std::nullopt,
             "bundle sizes " + std::to_string(ctx.bundles[lo].size()) + " and " +
                 std::to_string(ctx.bundles[hi].size()) + " differ by more than one");
}

}  // namespace

FairnessReport check(const TemporalInstance& instance, const Allocation& allocation,
                     std::span<const GoodId> set, Predicate predicate,
                     const CheckOptions& options) {
  const auto s = normalize_good_set(instance, set);
  const Allocation restricted = allocation.restricted_to(s);
  CheckContext ctx{instance, s, restricted, restricted.bundles(instance.agent_count()),
                   predicate, options, {}};
  switch (predicate) {
    case Predicate::EF: check_ef(ctx); break;
    case Predicate::EF1:
    case Predicate::EFX: check_ef1_or_efx(ctx); break;
    case Predicate::PROP: check_prop(ctx); break;
    case Predicate::PROP1: check_prop1(ctx); break;
    case Predicate::SD_EF: check_sd_ef(ctx); break;
    case Predicate::SD_EF1: check_sd_ef1(ctx); break;
    case Predicate::SD_PROP1: check_sd_prop1(ctx); break;
    case Predicate::PO: check_po(ctx); break;
    case Predicate::BALANCED: check_balanced(ctx); break;
  }
  return std::move(ctx.report);
}

FairnessReport check_temporal(const TemporalInstance& instance,
                              const Allocation& allocation, Predicate predicate,
                              const Scope& scope, const CheckOptions& options) {
  if (allocation.size() != instance.good_count())
    throw std::invalid_argument("temporal check needs an allocation of all goods");
  FairnessReport report;
  for (const auto& set : scope.sets(instance)) {
    report.merge(check(instance, allocation, set, predicate, options));
    if (options.first_violation_only && !report.passed) break;
  }
  return report;
}

bool cancel_out(const TemporalInstance& instance, const AllocationPair& pair) {
  if (instance.agent_count() != 2)
    throw std::invalid_argument("cancel_out is defined for two agents");
  if (pair.first.goods() != pair.second.goods())
    throw std::invalid_argument("cancel_out needs both allocations over the same goods");
  for (int i = 0; i < 2; ++i) {
    const Rational mine = instance.bundle_value(i, pair.first.bundle(i)) +
                          instance.bundle_value(i, pair.second.bundle(i));
    const Rational theirs = instance.bundle_value(i, pair.first.bundle(1 - i)) +
                            instance.bundle_value(i, pair.second.bundle(1 - i));
    if (mine < theirs) return false;
  }
  return true;
}

bool sdef1_count_conditions(const TemporalInstance& instance,
                            const Allocation& allocation,
                            std::span<const GoodId> set, CountCondition condition) {
  const auto s = normalize_good_set(instance, set);
  const Allocation restricted = allocation.restricted_to(s);
  const int n = instance.agent_count();
  for (int i = 0; i < n; ++i) {
    const auto ranked = preference_ordering(instance, i, s).ranked;
    std::vector<int> counts(n, 0);
    for (std::size_t pos = 0; pos < ranked.size(); ++pos) {
      counts[restricted.owner(ranked[pos])]++;
      const int r = static_cast<int>(pos) + 1;
      if (condition == CountCondition::Sufficiency) {
        for (int j = 0; j < n; ++j)
          if (counts[i] < counts[j] - 1) return false;
      } else {
        const bool strict_boundary =
            pos + 1 == ranked.size() ||
            instance.value_class(i, ranked[pos + 1]) !=
                instance.value_class(i, ranked[pos]);
        if (strict_boundary && counts[i] < r / n) return false;
      }
    }
  }
  return true;
}

}  // namespace tempfair
