#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "powclass/commutators.hpp"
#include "powclass/constructors.hpp"
#include "powclass/isomorphism.hpp"
#include "powclass/lattice.hpp"
#include "powclass/powerful.hpp"
#include "powclass/psylow.hpp"

namespace powclass {

enum class ClosureKind { weak, strong };

struct ClosureReport {
  Subgroup subject;
  ClosureKind kind = ClosureKind::weak;
  bool holds = true;
  /// (g, x): for weak closure x generates part of W^g ⊆ P with W^g != W;
  /// for strong closure x ∈ W^g ∩ P lies outside W.
  std::optional<std::pair<ElementId, ElementId>> witness;

  explicit operator bool() const noexcept { return holds; }
};

namespace detail {

inline void require_chain(const Subgroup& w, const Subgroup& p, const GroupPtr& g) {
  if (w.ambient() != g || p.ambient() != g) {
    throw Error(ErrorKind::AmbientMismatch, "subgroups do not live in " + g->label());
  }
  if (!w.is_subgroup_of(p)) throw Error(ErrorKind::NotMember, "W is not contained in P");
}

inline void require_sylow(const Subgroup& p, const GroupPtr& g, unsigned prime) {
  if (p.ambient() != g || !is_power_of(p.order(), prime) || p.order() != p_part(g->order(), prime)) {
    throw Error(ErrorKind::NotSylow, "subgroup is not a Sylow " + std::to_string(prime) +
                                         "-subgroup of " + g->label());
  }
}

inline const GroupPtr& wreath_cpcp_reference(unsigned p) {
  static const GroupPtr w2 = wreath_cpcp(2);
  static const GroupPtr w3 = wreath_cpcp(3);
  return p == 2 ? w2 : w3;
}

/// Smallest member of the coset x·K, a canonical representative mod K.
inline ElementId coset_canonical(const Group& g, const Subgroup& k, ElementId x) {
  ElementId best = x;
  for (ElementId e : k.elements()) best = std::min(best, g.mul(x, e));
  return best;
}

}  // namespace detail

/// Every G-conjugate of W lying in P equals W. Scans g in id order and
/// reports the first violation. W^g ⊆ P is tested on generators only.
inline ClosureReport is_weakly_closed(const Subgroup& w, const Subgroup& p, const GroupPtr& g) {
  detail::require_chain(w, p, g);
  ClosureReport report{w, ClosureKind::weak, true, std::nullopt};
  for (ElementId x = 0; x < g->order(); ++x) {
    bool inside = true;
    bool equal = true;
    ElementId moved = 0;
    for (ElementId s : w.generators()) {
      const ElementId c = g->conj(s, x);
      if (!p.contains(c)) {
        inside = false;
        break;
      }
      if (equal && !w.contains(c)) {
        equal = false;
        moved = c;
      }
    }
    if (inside && !equal) {
      report.holds = false;
      report.witness = std::make_pair(x, moved);
      return report;
    }
  }
  return report;
}

/// W^g ∩ P ⊆ W for every g in G.
inline ClosureReport is_strongly_closed(const Subgroup& w, const Subgroup& p, const GroupPtr& g) {
  detail::require_chain(w, p, g);
  ClosureReport report{w, ClosureKind::strong, true, std::nullopt};
  for (ElementId x = 0; x < g->order(); ++x) {
    for (ElementId e : w.elements()) {
      const ElementId c = g->conj(e, x);
      if (p.contains(c) && !w.contains(c)) {
        report.holds = false;
        report.witness = std::make_pair(x, c);
        return report;
      }
    }
  }
  return report;
}

/// < x^-1 x^y : x ∈ P, y ∈ G, x^y ∈ P >
inline Subgroup focal_by_fusion(const Subgroup& p, const GroupPtr& g) {
  SubgroupBuilder b(g);
  for (ElementId x : p.elements()) {
    const ElementId xinv = g->inv(x);
    for (ElementId y = 0; y < g->order(); ++y) {
      const ElementId c = g->conj(x, y);
      if (p.contains(c)) b.add(g->mul(xinv, c));
    }
    if (b.order() == p.order()) break;
  }
  return b.build();
}

/// P ∩ G', checked against the fusion-generated form.
inline Subgroup focal_subgroup(const Subgroup& p, const GroupPtr& g, unsigned prime) {
  detail::require_sylow(p, g, prime);
  Subgroup direct = intersection(p, derived_subgroup(g));
  if (!(focal_by_fusion(p, g) == direct)) {
    throw Error(ErrorKind::InternalConsistency, "focal subgroup disagrees with its fusion form");
  }
  return direct;
}

/// Right coset representatives of H in G, one per coset Hx. `pick_last`
/// takes the largest id in each coset instead of the smallest, which gives
/// a second, independent transversal.
inline std::vector<ElementId> right_transversal(const Subgroup& h, bool pick_last = false) {
  const auto& g = *h.ambient();
  std::vector<char> seen(g.order(), 0);
  std::vector<ElementId> reps;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    ElementId rep = x;
    for (ElementId e : h.elements()) {
      const ElementId y = g.mul(e, x);
      seen[y] = 1;
      rep = pick_last ? std::max(rep, y) : std::min(rep, y);
    }
    reps.push_back(rep);
  }
  return reps;
}

/// Transfer G -> P/P'. `values[g]` is the canonical representative (the
/// smallest id) of the image coset in P.
struct TransferData {
  Subgroup p;
  Subgroup p_derived;
  std::vector<ElementId> transversal;
  std::vector<ElementId> values;

  /// V(xs) = V(x)V(s) for all x and every generator s of G, which forces
  /// V(xy) = V(x)V(y) for all pairs.
  bool is_homomorphism() const {
    const auto& g = *p.ambient();
    for (ElementId x = 0; x < g.order(); ++x) {
      for (ElementId y : g.generator_ids()) {
        const ElementId lhs = values[g.mul(x, y)];
        const ElementId rhs = detail::coset_canonical(g, p_derived, g.mul(values[x], values[y]));
        if (lhs != rhs) return false;
      }
    }
    return true;
  }
};

namespace detail {

struct CosetIndex {
  std::vector<std::size_t> coset_of;
  std::vector<ElementId> reps;

  CosetIndex(const Subgroup& h, std::vector<ElementId> transversal) : reps(std::move(transversal)) {
    const auto& g = *h.ambient();
    coset_of.assign(g.order(), 0);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (ElementId e : h.elements()) coset_of[g.mul(e, reps[i])] = i;
    }
  }
};

inline ElementId transfer_with(const Subgroup& p, const Subgroup& p_derived, const CosetIndex& idx,
                               ElementId x) {
  const auto& g = *p.ambient();
  ElementId acc = Group::identity();
  for (ElementId t : idx.reps) {
    const ElementId tx = g.mul(t, x);
    const ElementId u = idx.reps[idx.coset_of[tx]];
    acc = g.mul(acc, g.mul(tx, g.inv(u)));
  }
  return coset_canonical(g, p_derived, acc);
}

}  // namespace detail

/// V(x) = prod_i t_i x t_{j(i)}^-1 mod P', where t_{j(i)} represents P t_i x.
inline ElementId transfer(const Subgroup& p, ElementId x, const std::vector<ElementId>& transversal) {
  const Subgroup pd = derived_subgroup(p);
  return detail::transfer_with(p, pd, detail::CosetIndex(p, transversal), x);
}

inline ElementId transfer(const Subgroup& p, ElementId x) {
  return transfer(p, x, right_transversal(p));
}

inline TransferData transfer_map(const Subgroup& p, bool pick_last = false) {
  TransferData data{p, derived_subgroup(p), right_transversal(p, pick_last), {}};
  const detail::CosetIndex idx(p, data.transversal);
  const auto& g = *p.ambient();
  data.values.resize(g.order());
  for (ElementId x = 0; x < g.order(); ++x) data.values[x] = detail::transfer_with(p, data.p_derived, idx, x);
  return data;
}

/// P ∩ G' = P ∩ H' with P a Sylow p-subgroup of G inside H.
inline bool controls_transfer(const Subgroup& h, const GroupPtr& g, unsigned p) {
  if (h.ambient() != g) throw Error(ErrorKind::AmbientMismatch, "H does not live in " + g->label());
  if (p_part(h.order(), p) != p_part(g->order(), p)) {
    throw Error(ErrorKind::SylowNotInside, "H does not contain a Sylow " + std::to_string(p) + "-subgroup");
  }
  const Subgroup syl = sylow_p(h, p);
  return intersection(syl, derived_subgroup(g)) == intersection(syl, derived_subgroup(h));
}

/// Some normal subgroup of P has quotient isomorphic to C_p ≀ C_p.
inline bool has_cpwrcp_quotient(const GroupPtr& p_group, unsigned p, const Limits& limits = {}) {
  if (p != 2 && p != 3) {
    throw Error(ErrorKind::UnsupportedPrime, "wreath quotient test supports p in {2, 3} only");
  }
  detail::require_p_group(p_group, p);
  std::size_t target = p;
  for (unsigned i = 0; i < p; ++i) target *= p;
  if (p_group->order() < target) return false;
  const GroupPtr& wreath = detail::wreath_cpcp_reference(p);
  for (const auto& n : normal_subgroups(p_group, limits)) {
    if (p_group->order() != target * n.order()) continue;
    if (is_isomorphic(quotient(p_group, n).group, wreath, limits)) return true;
  }
  return false;
}

/// For every subgroup A ≤ P and g ∈ G with A^g ≤ P: g ∈ C_G(A) N_G(W).
inline bool strongly_controls_fusion(const Subgroup& w, const Subgroup& p, const GroupPtr& g,
                                     const Limits& limits = {}) {
  detail::require_chain(w, p, g);
  const Subgroup n = normalizer(g, w);
  // left cosets xN: x ∈ C N  ⇔  the coset of x is the coset of some c ∈ C
  std::vector<std::size_t> coset(g->order(), 0);
  {
    std::vector<char> seen(g->order(), 0);
    std::size_t k = 0;
    for (ElementId x = 0; x < g->order(); ++x) {
      if (seen[x]) continue;
      for (ElementId e : n.elements()) {
        const ElementId y = g->mul(x, e);
        seen[y] = 1;
        coset[y] = k;
      }
      ++k;
    }
  }
  for (const auto& a : all_subgroups(p, limits)) {
    const Subgroup c = centralizer(g, a.generators());
    std::vector<char> reachable(g->order(), 0);
    for (ElementId x : c.elements()) reachable[coset[x]] = 1;
    for (ElementId x = 0; x < g->order(); ++x) {
      if (reachable[coset[x]]) continue;
      bool inside = true;
      for (ElementId s : a.generators()) {
        if (!p.contains(g->conj(s, x))) {
          inside = false;
          break;
        }
      }
      if (inside) return false;
    }
  }
  return true;
}

/// P ∩ G' = < P ∩ N_G(P)', P ∩ (P')^g : g ∈ G >.
inline bool verify_gruen_first(const GroupPtr& g, unsigned p) {
  const Subgroup syl = sylow_p(g, p);
  const Subgroup lhs = intersection(syl, derived_subgroup(g));
  const Subgroup pd = derived_subgroup(syl);
  SubgroupBuilder b(intersection(syl, derived_subgroup(normalizer(g, syl))));
  for (ElementId x = 0; x < g->order(); ++x) {
    for (ElementId e : pd.elements()) {
      const ElementId c = g->conj(e, x);
      if (syl.contains(c)) b.add(c);
    }
  }
  return b.build() == lhs;
}

}  // namespace powclass
