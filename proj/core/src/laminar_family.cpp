#include "tempfair/laminar_family.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tempfair {

namespace {

std::string set_to_string(const std::vector<GoodId>& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i > 0) out += ",";
    out += to_string(set[i]);
  }
  return out + "}";
}

bool subset_of(const std::vector<GoodId>& a, const std::vector<GoodId>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool disjoint(const std::vector<GoodId>& a, const std::vector<GoodId>& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib)
      ++ia;
    else if (*ib < *ia)
      ++ib;
    else
      return false;
  }
  return true;
}

}  // namespace

LaminarFamily::LaminarFamily(std::vector<std::vector<GoodId>> sets) {
  for (auto& set : sets) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (!set.empty()) sets_.push_back(std::move(set));
  }
  std::sort(sets_.begin(), sets_.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
  for (std::size_t i = 0; i < sets_.size(); ++i)
    for (std::size_t j = i + 1; j < sets_.size(); ++j) {
      // |sets_[i]| >= |sets_[j]|, so nesting can only be j inside i.
      if (!disjoint(sets_[i], sets_[j]) && !subset_of(sets_[j], sets_[i]))
        throw std::invalid_argument("family is not laminar: " +
                                    set_to_string(sets_[i]) + " and " +
                                    set_to_string(sets_[j]) +
                                    " overlap without nesting");
    }
}

bool LaminarFamily::contains_set(const std::vector<GoodId>& set) const {
  return std::find(sets_.begin(), sets_.end(), set) != sets_.end();
}

LaminarFamily complete_family(const LaminarFamily& family,
                              std::span<const GoodId> ground) {
  std::vector<GoodId> root(ground.begin(), ground.end());
  std::sort(root.begin(), root.end());
  root.erase(std::unique(root.begin(), root.end()), root.end());

  auto sets = family.sets();
  for (const auto& set : sets)
    if (!subset_of(set, root))
      throw std::invalid_argument("family set " + set_to_string(set) +
                                  " is not contained in the ground set");
  sets.push_back(root);

  // For each set, the union of its descendants equals the union of its
  // children, so the remainder against all strict subsets is what is left
  // uncovered by children.
  std::vector<std::vector<GoodId>> added;
  for (const auto& set : sets) {
    std::vector<GoodId> covered;
    for (const auto& other : sets) {
      if (other.size() < set.size() && subset_of(other, set)) {
        std::vector<GoodId> merged;
        std::set_union(covered.begin(), covered.end(), other.begin(), other.end(),
                       std::back_inserter(merged));
        covered = std::move(merged);
      }
    }
    if (!covered.empty() && covered.size() < set.size()) {
      std::vector<GoodId> rest;
      std::set_difference(set.begin(), set.end(), covered.begin(), covered.end(),
                          std::back_inserter(rest));
      added.push_back(std::move(rest));
    }
  }
  sets.insert(sets.end(), added.begin(), added.end());

  LaminarFamily completed{std::move(sets)};
  if (completed.size() > 2 * static_cast<int>(root.size()) - 1)
    throw std::logic_error("completed laminar family exceeds 2|M|-1 sets");
  return completed;
}

std::vector<std::vector<int>> family_children(const LaminarFamily& family) {
  const auto& sets = family.sets();
  const int count = family.size();
  // parent[j] = smallest strict superset of sets[j].
  std::vector<int> parent(count, -1);
  for (int j = 0; j < count; ++j) {
    for (int i = 0; i < count; ++i) {
      if (i == j || sets[i].size() <= sets[j].size()) continue;
      if (!std::includes(sets[i].begin(), sets[i].end(), sets[j].begin(),
                         sets[j].end()))
        continue;
      if (parent[j] == -1 || sets[i].size() < sets[parent[j]].size()) parent[j] = i;
    }
  }
  std::vector<std::vector<int>> children(count);
  for (int j = 0; j < count; ++j)
    if (parent[j] >= 0) children[parent[j]].push_back(j);
  for (auto& kids : children)
    std::sort(kids.begin(), kids.end(), [&](int a, int b) {
      return sets[a].front() < sets[b].front();
    });
  return children;
}

std::vector<int> topological_order(const LaminarFamily& family) {
  const auto children = family_children(family);
  std::vector<int> roots;
  {
    std::vector<bool> is_child(family.size(), false);
    for (const auto& kids : children)
      for (int k : kids) is_child[k] = true;
    for (int i = 0; i < family.size(); ++i)
      if (!is_child[i]) roots.push_back(i);
    std::sort(roots.begin(), roots.end(), [&](int a, int b) {
      return family.sets()[a].front() < family.sets()[b].front();
    });
  }
  std::vector<int> order;
  order.reserve(family.size());
  // Post-order: children first, so descendants always precede ancestors.
  auto visit = [&](auto&& self, int node) -> void {
    for (int kid : children[node]) self(self, kid);
    order.push_back(node);
  };
  for (int root : roots) visit(visit, root);
  return order;
}

}  // namespace tempfair
