#pragma once

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "powclass/subgroup.hpp"

namespace powclass {

/// Conjugacy classes of U, each sorted, ordered by their smallest member.
inline std::vector<std::vector<ElementId>> conjugacy_classes(const Subgroup& u) {
  const auto& g = *u.ambient();
  std::vector<char> seen(g.order(), 0);
  std::vector<std::vector<ElementId>> classes;
  for (ElementId x : u.elements()) {
    if (seen[x]) continue;
    std::vector<ElementId> cls{x};
    seen[x] = 1;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (ElementId s : u.generators()) {
        ElementId y = g.conj(cls[i], s);
        if (!seen[y]) {
          seen[y] = 1;
          cls.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

namespace detail {

/// Orders subgroups by size, then lexicographically by member ids.
inline void sort_subgroups(std::vector<Subgroup>& subs) {
  std::sort(subs.begin(), subs.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
}

/// Closes `seeds` under joins. Every subgroup in the result is a join of
/// seeds, and joining with one seed at a time reaches all such joins.
inline std::vector<Subgroup> join_closure(std::vector<Subgroup> seeds, std::size_t cap) {
  std::unordered_map<ElementSet, std::size_t> index;
  std::vector<Subgroup> subs;
  auto insert = [&](Subgroup s) {
    if (index.contains(s.members())) return;
    if (subs.size() >= cap) {
      throw Error(ErrorKind::CapExceeded,
                  "subgroup lattice exceeds " + std::to_string(cap) + " distinct joins");
    }
    index.emplace(s.members(), subs.size());
    subs.push_back(std::move(s));
  };
  for (auto& s : seeds) insert(s);
  std::vector<Subgroup> distinct_seeds = subs;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (const auto& seed : distinct_seeds) {
      if (seed.is_subgroup_of(subs[i])) continue;
      Subgroup cur = subs[i];
      SubgroupBuilder b(cur);
      b.add_all(seed.generators());
      insert(b.build());
    }
  }
  sort_subgroups(subs);
  return subs;
}

}  // namespace detail

/// All normal subgroups of U, as the join closure of the normal closures of
/// single elements. Elements are visited once per class of cyclic subgroups
/// (conjugates and generators of <x> have the same normal closure).
inline std::vector<Subgroup> normal_subgroups(const Subgroup& u, const Limits& limits = {}) {
  const auto& g = *u.ambient();
  std::vector<char> done(g.order(), 0);
  std::vector<Subgroup> seeds{trivial_subgroup(u.ambient())};
  for (const auto& cls : conjugacy_classes(u)) {
    const ElementId x = cls.front();
    if (done[x]) continue;
    for (ElementId y : cls) {
      const auto ord = static_cast<long long>(g.element_order(y));
      for (long long k = 1; k < ord; ++k) {
        if (std::gcd(k, ord) == 1) done[g.pow(y, k)] = 1;
      }
      done[y] = 1;
    }
    const ElementId seed[] = {x};
    seeds.push_back(normal_closure(u, seed));
  }
  return detail::join_closure(std::move(seeds), limits.max_lattice_joins);
}

inline std::vector<Subgroup> normal_subgroups(const GroupPtr& g, const Limits& limits = {}) {
  return normal_subgroups(whole(g), limits);
}

/// Every subgroup of U (join closure of the cyclic subgroups). Exponential in
/// general; bounded by `limits.max_subgroups` and meant for small U only.
inline std::vector<Subgroup> all_subgroups(const Subgroup& u, const Limits& limits = {}) {
  const auto& g = *u.ambient();
  std::vector<char> done(g.order(), 0);
  std::vector<Subgroup> seeds{trivial_subgroup(u.ambient())};
  for (ElementId x : u.elements()) {
    if (done[x]) continue;
    const ElementId gen[] = {x};
    Subgroup c = generated(u.ambient(), gen);
    const auto ord = static_cast<long long>(g.element_order(x));
    for (long long k = 1; k <= ord; ++k) {
      if (std::gcd(k, ord) == 1) done[g.pow(x, k)] = 1;
    }
    seeds.push_back(std::move(c));
  }
  return detail::join_closure(std::move(seeds), limits.max_subgroups);
}

}  // namespace powclass
