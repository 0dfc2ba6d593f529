#pragma once

#include <optional>
#include <vector>

#include "powclass/series.hpp"
#include "powclass/subgroup.hpp"

namespace powclass {

/// [A, B], as the normal closure in <A ∪ B> of the commutators of generator
/// pairs.
inline Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
  require_same_ambient(a, b);
  const auto& g = *a.ambient();
  std::vector<ElementId> seeds;
  for (ElementId x : a.generators()) {
    for (ElementId y : b.generators()) {
      ElementId c = g.comm(x, y);
      if (c != Group::identity()) seeds.push_back(c);
    }
  }
  if (seeds.empty()) return trivial_subgroup(a.ambient());
  return normal_closure(join(a, b), seeds);
}

inline Subgroup derived_subgroup(const Subgroup& h) { return commutator_subgroup(h, h); }

inline Subgroup derived_subgroup(const GroupPtr& g) { return derived_subgroup(whole(g)); }

/// [N, _t P] = [[N, _{t-1} P], P] with [N, _1 P] = [N, P].
inline Subgroup iterated_commutator(const Subgroup& n, const Subgroup& p, int t) {
  if (t < 1) throw Error(ErrorKind::BadParameter, "iterated commutator needs t >= 1");
  Subgroup cur = commutator_subgroup(n, p);
  for (int i = 1; i < t && !cur.is_trivial(); ++i) cur = commutator_subgroup(cur, p);
  return cur;
}

/// <x^k : x in N>. Every element is powered, not only the generators.
inline Subgroup power_subgroup(const Subgroup& n, long long k) {
  if (k < 1) throw Error(ErrorKind::BadParameter, "power exponent must be positive");
  const auto& g = *n.ambient();
  SubgroupBuilder b(n.ambient());
  for (ElementId x : n.elements()) b.add(g.pow(x, k));
  return b.build();
}

inline Subgroup center(const Subgroup& h) { return centralizer(h, h.generators()); }

inline Subgroup center(const GroupPtr& g) { return center(whole(g)); }

/// Z_0 = 1, Z_{i+1} = { x in H : [x, s] in Z_i for every generator s of H },
/// stopping once the series is stationary.
inline SeriesChain upper_central_series(const Subgroup& h) {
  const auto& g = *h.ambient();
  SeriesChain chain{SeriesKind::central_upper, {trivial_subgroup(h.ambient())}, std::nullopt};
  while (true) {
    const Subgroup& prev = chain.terms.back();
    ElementSet members(g.order());
    for (ElementId x : h.elements()) {
      bool ok = true;
      for (ElementId s : h.generators()) {
        if (!prev.contains(g.comm(x, s))) {
          ok = false;
          break;
        }
      }
      if (ok) members.set(x);
    }
    if (members == prev.members()) break;
    chain.terms.push_back(from_members(h.ambient(), members));
  }
  return chain;
}

inline SeriesChain upper_central_series(const GroupPtr& g) { return upper_central_series(whole(g)); }

/// H = γ_1 ≥ γ_2 = [H, H] ≥ γ_3 = [γ_2, H] ≥ ... until stationary.
inline SeriesChain lower_central_series(const Subgroup& h) {
  SeriesChain chain{SeriesKind::central_lower, {h}, std::nullopt};
  while (!chain.terms.back().is_trivial()) {
    Subgroup next = commutator_subgroup(chain.terms.back(), h);
    if (next == chain.terms.back()) break;
    chain.terms.push_back(std::move(next));
  }
  return chain;
}

inline SeriesChain lower_central_series(const GroupPtr& g) { return lower_central_series(whole(g)); }

/// Nilpotency class, or nullopt when the lower central series stalls above 1.
inline std::optional<int> nilpotency_class(const Subgroup& h) {
  SeriesChain lower = lower_central_series(h);
  if (!lower.terms.back().is_trivial()) return std::nullopt;
  return static_cast<int>(lower.size()) - 1;
}

inline std::optional<int> nilpotency_class(const GroupPtr& g) { return nilpotency_class(whole(g)); }

}  // namespace powclass
