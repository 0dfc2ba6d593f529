#pragma once

// Brute-force reference implementations. They share only Group::mul/inv with
// the library and recompute everything else by exhaustive scans over element
// sets, so they are slow and meant for small groups.

#include <algorithm>
#include <set>
#include <vector>

#include "powclass.hpp"

namespace oracle {

using powclass::ElementId;
using powclass::GroupPtr;
using Set = std::set<ElementId>;

/// Closure of `seeds` under multiplication (finite, so inverses come free).
inline Set closure(const GroupPtr& g, const Set& seeds) {
  Set s{powclass::Group::identity()};
  std::vector<ElementId> frontier{powclass::Group::identity()};
  while (!frontier.empty()) {
    std::vector<ElementId> next;
    for (ElementId x : frontier) {
      for (ElementId y : seeds) {
        const ElementId z = g->mul(x, y);
        if (s.insert(z).second) next.push_back(z);
      }
    }
    frontier = std::move(next);
  }
  return s;
}

inline Set elements(const powclass::Subgroup& h) { return Set(h.elements().begin(), h.elements().end()); }

inline Set all(const GroupPtr& g) {
  Set s;
  for (ElementId x = 0; x < g->order(); ++x) s.insert(x);
  return s;
}

inline bool subset(const Set& a, const Set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

inline ElementId comm(const GroupPtr& g, ElementId a, ElementId b) {
  return g->mul(g->mul(g->inv(a), g->inv(b)), g->mul(a, b));
}

inline ElementId power(const GroupPtr& g, ElementId x, long long k) {
  ElementId r = powclass::Group::identity();
  for (long long i = 0; i < k; ++i) r = g->mul(r, x);
  return r;
}

/// [A, B] from every element pair.
inline Set commutator(const GroupPtr& g, const Set& a, const Set& b) {
  Set seeds;
  for (ElementId x : a) {
    for (ElementId y : b) seeds.insert(comm(g, x, y));
  }
  return closure(g, seeds);
}

inline Set power_subgroup(const GroupPtr& g, const Set& n, long long k) {
  Set seeds;
  for (ElementId x : n) seeds.insert(power(g, x, k));
  return closure(g, seeds);
}

inline Set join(const GroupPtr& g, const Set& a, const Set& b) {
  Set s = a;
  s.insert(b.begin(), b.end());
  return closure(g, s);
}

inline bool is_normal(const GroupPtr& g, const Set& h) {
  for (ElementId x : h) {
    for (ElementId y = 0; y < g->order(); ++y) {
      if (!h.contains(g->mul(g->mul(g->inv(y), x), y))) return false;
    }
  }
  return true;
}

/// Every subgroup: grow each known subgroup by one outside element until no
/// new subgroup appears.
inline std::vector<Set> all_subgroups(const GroupPtr& g) {
  std::set<Set> found{Set{powclass::Group::identity()}};
  std::vector<Set> queue(found.begin(), found.end());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Set h = queue[i];
    for (ElementId x = 0; x < g->order(); ++x) {
      if (h.contains(x)) continue;
      Set s = h;
      s.insert(x);
      Set c = closure(g, s);
      if (found.insert(c).second) queue.push_back(c);
    }
  }
  return queue;
}

inline std::vector<Set> normal_subgroups(const GroupPtr& g) {
  std::vector<Set> out;
  for (auto& h : all_subgroups(g)) {
    if (is_normal(g, h)) out.push_back(h);
  }
  return out;
}

/// N/K powerfully embedded in P/K: [N, P] ≤ N^{2p} K.
inline bool is_pe_mod(const GroupPtr& g, const Set& n, const Set& k, unsigned p) {
  return subset(commutator(g, n, all(g)), join(g, power_subgroup(g, n, 2LL * p), k));
}

inline Set eta_from_subgroups(const GroupPtr& g, unsigned p) {
  Set acc{powclass::Group::identity()};
  for (const auto& h : all_subgroups(g)) {
    if (is_normal(g, h) && is_pe_mod(g, h, {powclass::Group::identity()}, p)) acc = join(g, acc, h);
  }
  return acc;
}

/// Minimal η-series length from 1 to `target`, breadth-first over normal subgroups.
inline int pwh(const GroupPtr& g, const std::vector<Set>& normals, const Set& target, unsigned p) {
  std::vector<int> dist(normals.size(), -1);
  std::vector<std::size_t> queue;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    if (normals[i].size() == 1) {
      dist[i] = 0;
      queue.push_back(i);
    }
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const std::size_t i = queue[q];
    if (normals[i] == target) return dist[i];
    for (std::size_t j = 0; j < normals.size(); ++j) {
      if (dist[j] >= 0 || !subset(normals[i], normals[j]) || !subset(normals[j], target)) continue;
      if (is_pe_mod(g, normals[j], normals[i], p)) {
        dist[j] = dist[i] + 1;
        queue.push_back(j);
      }
    }
  }
  return -1;
}

inline Set center(const GroupPtr& g) {
  Set z;
  for (ElementId x = 0; x < g->order(); ++x) {
    bool central = true;
    for (ElementId y = 0; y < g->order() && central; ++y) central = g->mul(x, y) == g->mul(y, x);
    if (central) z.insert(x);
  }
  return z;
}

/// Z_{i+1} = { x : [x, y] ∈ Z_i for all y }
inline std::vector<Set> upper_central(const GroupPtr& g) {
  std::vector<Set> series{Set{powclass::Group::identity()}};
  while (true) {
    Set next;
    for (ElementId x = 0; x < g->order(); ++x) {
      bool ok = true;
      for (ElementId y = 0; y < g->order() && ok; ++y) ok = series.back().contains(comm(g, x, y));
      if (ok) next.insert(x);
    }
    if (next == series.back()) return series;
    series.push_back(next);
  }
}

/// Intersection of all G-conjugates of `h`.
inline Set core(const GroupPtr& g, const Set& h) {
  Set acc = h;
  for (ElementId y = 0; y < g->order(); ++y) {
    Set conj;
    for (ElementId x : h) conj.insert(g->mul(g->mul(g->inv(y), x), y));
    Set keep;
    std::set_intersection(acc.begin(), acc.end(), conj.begin(), conj.end(), std::inserter(keep, keep.end()));
    acc = std::move(keep);
  }
  return acc;
}

/// Largest normal subgroup whose order satisfies `pred`, from the
/// exhaustive normal-subgroup list.
template <typename Pred>
Set largest_normal(const GroupPtr& g, Pred pred) {
  Set best{powclass::Group::identity()};
  for (const auto& n : oracle::normal_subgroups(g)) {
    if (pred(n.size()) && n.size() > best.size()) best = n;
  }
  return best;
}

inline bool weakly_closed(const GroupPtr& g, const Set& w, const Set& p) {
  for (ElementId y = 0; y < g->order(); ++y) {
    Set conj;
    for (ElementId x : w) conj.insert(g->mul(g->mul(g->inv(y), x), y));
    if (subset(conj, p) && conj != w) return false;
  }
  return true;
}

inline bool strongly_closed(const GroupPtr& g, const Set& w, const Set& p) {
  for (ElementId y = 0; y < g->order(); ++y) {
    for (ElementId x : w) {
      const ElementId c = g->mul(g->mul(g->inv(y), x), y);
      if (p.contains(c) && !w.contains(c)) return false;
    }
  }
  return true;
}

}  // namespace oracle
