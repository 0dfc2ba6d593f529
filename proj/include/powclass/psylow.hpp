#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "powclass/homomorphism.hpp"
#include "powclass/lattice.hpp"
#include "powclass/series.hpp"

namespace powclass {

inline bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Largest power of p dividing n.
inline std::size_t p_part(std::size_t n, unsigned p) {
  std::size_t part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

/// n = p^k for some k >= 0.
inline bool is_power_of(std::size_t n, unsigned p) { return n >= 1 && p_part(n, p) == n; }

inline std::vector<unsigned> prime_divisors(std::size_t n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; static_cast<std::size_t>(d) * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(static_cast<unsigned>(n));
  return out;
}

inline bool is_p_element(const Group& g, ElementId x, unsigned p) {
  return is_power_of(g.element_order(x), p);
}

/// A Sylow p-subgroup of U, grown deterministically: start from an element
/// of order p, then repeatedly adjoin the first p-element of N_U(H) outside H.
inline Subgroup sylow_p(const Subgroup& u, unsigned p) {
  const auto& g = *u.ambient();
  const std::size_t target = p_part(u.order(), p);
  if (target == 1) return trivial_subgroup(u.ambient());
  if (target == u.order()) return u;

  SubgroupBuilder start(u.ambient());
  for (ElementId x : u.elements()) {
    const auto ord = g.element_order(x);
    if (ord % p == 0) {
      start.add(g.pow(x, static_cast<long long>(ord / p)));
      break;
    }
  }
  Subgroup h = start.build();
  while (h.order() < target) {
    Subgroup n = normalizer(u, h);
    bool grown = false;
    for (ElementId z : n.elements()) {
      if (!h.contains(z) && is_p_element(g, z, p)) {
        SubgroupBuilder b(h);
        b.add(z);
        h = b.build();
        grown = true;
        break;
      }
    }
    if (!grown) throw Error(ErrorKind::InternalConsistency, "Sylow climb found no p-element");
  }
  return h;
}

inline Subgroup sylow_p(const GroupPtr& g, unsigned p) { return sylow_p(whole(g), p); }

namespace detail {

/// Join of the normal closures ncl(x) that pass `keep`, over class
/// representatives x that pass `candidate`.
template <typename Candidate, typename Keep>
Subgroup core_by_closures(const Subgroup& u, Candidate candidate, Keep keep) {
  SubgroupBuilder b(u.ambient());
  for (const auto& cls : conjugacy_classes(u)) {
    const ElementId x = cls.front();
    if (b.contains(x) || !candidate(x)) continue;
    const ElementId seed[] = {x};
    Subgroup closure = normal_closure(u, seed);
    if (keep(closure)) b.add_all(closure.generators());
  }
  return b.build();
}

}  // namespace detail

/// O_p(U): generated by the x whose normal closure is a p-group.
inline Subgroup p_core(const Subgroup& u, unsigned p) {
  if (is_power_of(u.order(), p)) return u;
  const auto& g = *u.ambient();
  return detail::core_by_closures(
      u, [&](ElementId x) { return is_p_element(g, x, p); },
      [&](const Subgroup& c) { return is_power_of(c.order(), p); });
}

/// O_{p'}(U): generated by the x whose normal closure has order prime to p.
inline Subgroup pprime_core(const Subgroup& u, unsigned p) {
  if (u.order() % p != 0) return u;
  const auto& g = *u.ambient();
  return detail::core_by_closures(
      u, [&](ElementId x) { return g.element_order(x) % p != 0; },
      [&](const Subgroup& c) { return c.order() % p != 0; });
}

inline Subgroup p_core(const GroupPtr& g, unsigned p) { return p_core(whole(g), p); }
inline Subgroup pprime_core(const GroupPtr& g, unsigned p) { return pprime_core(whole(g), p); }

struct PSeriesResult {
  unsigned p = 0;
  /// 1 = K_0 ≤ K_1 = O_{p'} ≤ K_2 = O_{p'p} ≤ ... with K_{2j+1}/K_{2j} the
  /// p'-factors and K_{2j+2}/K_{2j+1} the p-factors. Trivial factors are kept
  /// so the parity of an index always tells which kind of factor it closes.
  SeriesChain chain;
  bool p_solvable = false;
  std::optional<int> p_length;
};

namespace detail {

/// Pulls the chosen core of G/K back into G. K trivial needs no quotient.
template <typename Core>
Subgroup relative_core(const GroupPtr& g, const Subgroup& k, Core core) {
  if (k.is_trivial()) return core(whole(g));
  Quotient q = quotient(g, k);
  return q.projection.preimage(core(whole(q.group)));
}

}  // namespace detail

inline PSeriesResult upper_p_series(const GroupPtr& g, unsigned p) {
  PSeriesResult result;
  result.p = p;
  result.chain.kind = SeriesKind::p_upper;
  result.chain.terms.push_back(trivial_subgroup(g));
  bool pprime_step = true;
  int stalls = 0;
  while (!result.chain.terms.back().is_whole()) {
    const Subgroup cur = result.chain.terms.back();
    Subgroup next = pprime_step
                        ? detail::relative_core(g, cur, [p](const Subgroup& u) { return pprime_core(u, p); })
                        : detail::relative_core(g, cur, [p](const Subgroup& u) { return p_core(u, p); });
    stalls = (next == cur) ? stalls + 1 : 0;
    result.chain.terms.push_back(std::move(next));
    pprime_step = !pprime_step;
    if (stalls == 2) break;
  }
  result.p_solvable = result.chain.terms.back().is_whole();
  if (result.p_solvable) {
    int length = 0;
    for (std::size_t i = 2; i < result.chain.size(); i += 2) {
      if (result.chain[i].order() != result.chain[i - 1].order()) ++length;
    }
    result.p_length = length;
  }
  return result;
}

/// O_{p'p}(G): the preimage of O_p(G/O_{p'}(G)).
inline Subgroup o_pprime_p(const GroupPtr& g, unsigned p) {
  Subgroup k1 = pprime_core(g, p);
  return detail::relative_core(g, k1, [p](const Subgroup& u) { return p_core(u, p); });
}

/// Normal p-complement test: |O_{p'}(U)| * |U|_p = |U|.
inline bool is_p_nilpotent(const Subgroup& u, unsigned p) {
  return pprime_core(u, p).order() * p_part(u.order(), p) == u.order();
}

inline bool is_p_nilpotent(const GroupPtr& g, unsigned p) { return is_p_nilpotent(whole(g), p); }

}  // namespace powclass
