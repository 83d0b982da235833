#include "tempfair/instance.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tempfair {

std::string to_string(GoodId id) {
  return "d" + std::to_string(id.day) + "#" + std::to_string(id.index);
}

TemporalInstance::TemporalInstance(
    int agent_count, std::vector<std::vector<std::vector<Rational>>> days) {
  if (agent_count < 1) throw std::invalid_argument("instance needs at least one agent");
  if (days.empty()) throw std::invalid_argument("instance needs at least one day");
  agents_ = agent_count;
  day_sizes_.reserve(days.size());
  for (std::size_t t = 0; t < days.size(); ++t) {
    if (days[t].empty())
      throw std::invalid_argument("day " + std::to_string(t + 1) + " is empty");
    day_offsets_.push_back(total_);
    day_sizes_.push_back(static_cast<int>(days[t].size()));
    total_ += static_cast<int>(days[t].size());
  }
  values_.assign(agents_, {});
  for (auto& row : values_) row.reserve(total_);
  for (std::size_t t = 0; t < days.size(); ++t) {
    for (std::size_t j = 0; j < days[t].size(); ++j) {
      const auto& vals = days[t][j];
      if (static_cast<int>(vals.size()) != agents_)
        throw std::invalid_argument("good d" + std::to_string(t + 1) + "#" +
                                    std::to_string(j) + " has " +
                                    std::to_string(vals.size()) + " values, expected " +
                                    std::to_string(agents_));
      for (int i = 0; i < agents_; ++i) {
        if (vals[i] < 0)
          throw std::invalid_argument("negative value for good d" +
                                      std::to_string(t + 1) + "#" + std::to_string(j));
        values_[i].push_back(vals[i]);
      }
    }
  }

  rank_.assign(agents_, std::vector<int>(total_));
  class_.assign(agents_, std::vector<int>(total_));
  std::vector<int> order(total_);
  for (int i = 0; i < agents_; ++i) {
    std::iota(order.begin(), order.end(), 0);
    // Value descending; flat index ascending breaks ties (the global order).
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return values_[i][a] > values_[i][b] || (values_[i][a] == values_[i][b] && a < b);
    });
    int cls = 0;
    for (int pos = 0; pos < total_; ++pos) {
      if (pos > 0 && values_[i][order[pos]] != values_[i][order[pos - 1]]) ++cls;
      rank_[i][order[pos]] = pos;
      class_[i][order[pos]] = cls;
    }
  }
}

int TemporalInstance::day_size(int day) const {
  if (day < 1 || day > day_count())
    throw std::invalid_argument("day " + std::to_string(day) + " out of range");
  return day_sizes_[day - 1];
}

bool TemporalInstance::contains(GoodId id) const {
  return id.day >= 1 && id.day <= day_count() && id.index >= 0 &&
         id.index < day_sizes_[id.day - 1];
}

int TemporalInstance::flat_index(GoodId id) const {
  if (!contains(id))
    throw std::invalid_argument("unknown good " + to_string(id));
  return day_offsets_[id.day - 1] + id.index;
}

GoodId TemporalInstance::good_at(int flat) const {
  if (flat < 0 || flat >= total_)
    throw std::invalid_argument("flat index out of range");
  const auto it = std::upper_bound(day_offsets_.begin(), day_offsets_.end(), flat);
  const int day = static_cast<int>(it - day_offsets_.begin());
  return GoodId{day, flat - day_offsets_[day - 1]};
}

const Rational& TemporalInstance::value(int agent, GoodId id) const {
  if (agent < 0 || agent >= agents_)
    throw std::invalid_argument("agent out of range");
  return values_[agent][flat_index(id)];
}

Rational TemporalInstance::bundle_value(int agent, std::span<const GoodId> goods) const {
  Rational sum = 0;
  for (const GoodId g : goods) sum += value(agent, g);
  return sum;
}

std::vector<GoodId> TemporalInstance::day_goods(int day) const {
  const int size = day_size(day);
  std::vector<GoodId> out;
  out.reserve(size);
  for (int j = 0; j < size; ++j) out.push_back(GoodId{day, j});
  return out;
}

std::vector<GoodId> TemporalInstance::all_goods() const {
  std::vector<GoodId> out;
  out.reserve(total_);
  for (int t = 1; t <= day_count(); ++t)
    for (int j = 0; j < day_sizes_[t - 1]; ++j) out.push_back(GoodId{t, j});
  return out;
}

int TemporalInstance::global_rank(int agent, GoodId id) const {
  if (agent < 0 || agent >= agents_)
    throw std::invalid_argument("agent out of range");
  return rank_[agent][flat_index(id)];
}

int TemporalInstance::value_class(int agent, GoodId id) const {
  if (agent < 0 || agent >= agents_)
    throw std::invalid_argument("agent out of range");
  return class_[agent][flat_index(id)];
}

Allocation::Allocation(std::vector<std::pair<GoodId, int>> owners)
    : entries_(std::move(owners)) {
  std::sort(entries_.begin(), entries_.end());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].second < 0)
      throw std::invalid_argument("negative agent id in allocation");
    if (i > 0 && entries_[i].first == entries_[i - 1].first)
      throw std::invalid_argument("duplicate good " + to_string(entries_[i].first) +
                                  " in allocation");
  }
}

Allocation Allocation::from_bundles(const std::vector<std::vector<GoodId>>& bundles) {
  std::vector<std::pair<GoodId, int>> owners;
  for (std::size_t i = 0; i < bundles.size(); ++i)
    for (const GoodId g : bundles[i]) owners.emplace_back(g, static_cast<int>(i));
  return Allocation(std::move(owners));
}

Allocation Allocation::merged(std::span<const Allocation> parts) {
  std::vector<std::pair<GoodId, int>> owners;
  for (const Allocation& part : parts)
    owners.insert(owners.end(), part.entries_.begin(), part.entries_.end());
  return Allocation(std::move(owners));
}

bool Allocation::contains(GoodId id) const {
  const auto it = std::lower_bound(
      entries_.begin(), entries_.end(), id,
      [](const auto& entry, GoodId g) { return entry.first < g; });
  return it != entries_.end() && it->first == id;
}

int Allocation::owner(GoodId id) const {
  const auto it = std::lower_bound(
      entries_.begin(), entries_.end(), id,
      [](const auto& entry, GoodId g) { return entry.first < g; });
  if (it == entries_.end() || it->first != id)
    throw std::invalid_argument("good " + to_string(id) + " not in allocation");
  return it->second;
}

std::vector<GoodId> Allocation::goods() const {
  std::vector<GoodId> out;
  out.reserve(entries_.size());
  for (const auto& [g, a] : entries_) out.push_back(g);
  return out;
}

std::vector<GoodId> Allocation::bundle(int agent) const {
  std::vector<GoodId> out;
  for (const auto& [g, a] : entries_)
    if (a == agent) out.push_back(g);
  return out;
}

std::vector<std::vector<GoodId>> Allocation::bundles(int agent_count) const {
  std::vector<std::vector<GoodId>> out(agent_count);
  for (const auto& [g, a] : entries_) {
    if (a >= agent_count)
      throw std::invalid_argument("allocation references agent " + std::to_string(a) +
                                  " beyond agent count");
    out[a].push_back(g);
  }
  return out;
}

Allocation Allocation::restricted_to(std::span<const GoodId> subset) const {
  std::vector<std::pair<GoodId, int>> owners;
  owners.reserve(subset.size());
  for (const GoodId g : subset) owners.emplace_back(g, owner(g));
  return Allocation(std::move(owners));
}

std::vector<GoodId> normalize_good_set(const TemporalInstance& instance,
                                       std::span<const GoodId> goods) {
  std::vector<GoodId> out(goods.begin(), goods.end());
  std::sort(out.begin(), out.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!instance.contains(out[i]))
      throw std::invalid_argument("unknown good " + to_string(out[i]));
    if (i > 0 && out[i] == out[i - 1])
      throw std::invalid_argument("duplicate good " + to_string(out[i]) + " in set");
  }
  return out;
}

PreferenceOrdering preference_ordering(const TemporalInstance& instance, int agent,
                                       std::span<const GoodId> goods) {
  PreferenceOrdering ordering;
  ordering.agent = agent;
  ordering.ranked = normalize_good_set(instance, goods);
  std::sort(ordering.ranked.begin(), ordering.ranked.end(), [&](GoodId a, GoodId b) {
    return instance.global_rank(agent, a) < instance.global_rank(agent, b);
  });
  return ordering;
}

std::vector<GoodId> top_set(const TemporalInstance& instance, int agent,
                            std::span<const GoodId> goods, int count) {
  const auto ordering = preference_ordering(instance, agent, goods);
  if (count < 0 || count > static_cast<int>(ordering.ranked.size()))
    throw std::invalid_argument("top_set count " + std::to_string(count) +
                                " out of range for set of size " +
                                std::to_string(ordering.ranked.size()));
  std::vector<GoodId> out(ordering.ranked.begin(), ordering.ranked.begin() + count);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GoodId> head_set(const TemporalInstance& instance, int agent,
                             std::span<const GoodId> goods, GoodId pivot) {
  const auto set = normalize_good_set(instance, goods);
  if (!std::binary_search(set.begin(), set.end(), pivot))
    throw std::invalid_argument("head_set pivot " + to_string(pivot) +
                                " not in the set");
  const int pivot_class = instance.value_class(agent, pivot);
  std::vector<GoodId> out;
  for (const GoodId g : set)
    if (instance.value_class(agent, g) <= pivot_class) out.push_back(g);
  return out;
}

std::vector<GoodId> prefix_goods(const TemporalInstance& instance, int day) {
  if (day < 1 || day > instance.day_count())
    throw std::invalid_argument("day " + std::to_string(day) + " out of range");
  std::vector<GoodId> out;
  for (int t = 1; t <= day; ++t) {
    const auto goods = instance.day_goods(t);
    out.insert(out.end(), goods.begin(), goods.end());
  }
  return out;
}

RestrictionFlags classify(const TemporalInstance& instance) {
  RestrictionFlags flags;
  flags.two_agents = instance.agent_count() == 2;

  // Weak orders coincide iff the value-class maps coincide: classes are
  // assigned in descending value order, so equality is structural.
  flags.identical_orderings = true;
  const auto goods = instance.all_goods();
  for (int i = 1; i < instance.agent_count() && flags.identical_orderings; ++i)
    for (const GoodId g : goods)
      if (instance.value_class(i, g) != instance.value_class(0, g)) {
        flags.identical_orderings = false;
        break;
      }

  flags.identical_days = true;
  const auto day_signature = [&](int day) {
    std::vector<std::vector<Rational>> sig;
    for (const GoodId g : instance.day_goods(day)) {
      std::vector<Rational> column;
      column.reserve(instance.agent_count());
      for (int i = 0; i < instance.agent_count(); ++i)
        column.push_back(instance.value(i, g));
      sig.push_back(std::move(column));
    }
    std::sort(sig.begin(), sig.end());
    return sig;
  };
  const auto first = day_signature(1);
  for (int t = 2; t <= instance.day_count(); ++t)
    if (day_signature(t) != first) {
      flags.identical_days = false;
      break;
    }
  return flags;
}

}  // namespace tempfair
