#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "powclass/commutators.hpp"
#include "powclass/lattice.hpp"
#include "powclass/psylow.hpp"
#include "powclass/series.hpp"

namespace powclass {

namespace detail {

inline void require_p_group(const GroupPtr& p_group, unsigned p) {
  if (!is_prime(p)) throw Error(ErrorKind::BadParameter, std::to_string(p) + " is not prime");
  if (!is_power_of(p_group->order(), p)) {
    throw Error(ErrorKind::NotPGroup, p_group->label() + " is not a " + std::to_string(p) + "-group");
  }
}

inline void require_normal_in(const Subgroup& n, const GroupPtr& p_group) {
  if (n.ambient() != p_group) {
    throw Error(ErrorKind::AmbientMismatch, "subgroup does not live in " + p_group->label());
  }
  if (!is_normal(n)) throw Error(ErrorKind::NotNormal, "subgroup is not normal in " + p_group->label());
}

}  // namespace detail

/// [N, P] ≤ N^{2p}, with N^{2p} generated by the (2p)-th powers of all of N.
inline bool is_powerfully_embedded(const Subgroup& n, const GroupPtr& p_group, unsigned p) {
  detail::require_p_group(p_group, p);
  detail::require_normal_in(n, p_group);
  return commutator_subgroup(n, whole(p_group)).is_subgroup_of(power_subgroup(n, 2LL * p));
}

/// The normal-subgroup lattice of a p-group P, with [X, P], X^p and X^{2p}
/// resolved to lattice nodes for every node X. All η computations run on
/// node indices: a quotient P/K is handled through the nodes above K, using
/// [N/K, P/K] = [N, P]K/K and (N/K)^{2p} = N^{2p}K/K.
///
/// Built eagerly; read-only afterwards.
class EtaLattice {
 public:
  using Node = std::size_t;

  EtaLattice(GroupPtr p_group, unsigned p, const Limits& limits = {})
      : group_(std::move(p_group)), p_(p) {
    detail::require_p_group(group_, p_);
    nodes_ = normal_subgroups(group_, limits);
    for (Node i = 0; i < nodes_.size(); ++i) index_.emplace(nodes_[i].members(), i);
    const Subgroup all = whole(group_);
    comm_.resize(nodes_.size());
    pow_p_.resize(nodes_.size());
    pow_2p_.resize(nodes_.size());
    for (Node i = 0; i < nodes_.size(); ++i) {
      comm_[i] = index_.at(commutator_subgroup(nodes_[i], all).members());
      pow_p_[i] = index_.at(power_subgroup(nodes_[i], p_).members());
      pow_2p_[i] = index_.at(power_subgroup(nodes_[i], 2LL * p_).members());
    }
  }

  const GroupPtr& group() const noexcept { return group_; }
  unsigned prime() const noexcept { return p_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const Subgroup& node(Node i) const { return nodes_[i]; }
  const std::vector<Subgroup>& nodes() const noexcept { return nodes_; }

  /// Nodes are sorted by order, so the ends are 1 and P.
  Node trivial() const noexcept { return 0; }
  Node top() const noexcept { return nodes_.size() - 1; }

  std::optional<Node> find(const Subgroup& s) const {
    if (s.ambient() != group_) return std::nullopt;
    auto it = index_.find(s.members());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Node index_of(const Subgroup& s) const {
    if (s.ambient() != group_) {
      throw Error(ErrorKind::AmbientMismatch, "subgroup does not live in " + group_->label());
    }
    auto i = find(s);
    if (!i) throw Error(ErrorKind::NotNormal, "subgroup is not normal in " + group_->label());
    return *i;
  }

  bool leq(Node a, Node b) const { return nodes_[a].members().is_subset_of(nodes_[b].members()); }

  /// Smallest node containing both; the first such node in order-sorted
  /// position is the join because every node containing both contains it.
  Node join(Node a, Node b) const {
    if (leq(a, b)) return b;
    if (leq(b, a)) return a;
    for (Node c = std::max(a, b) + 1; c < nodes_.size(); ++c) {
      if (leq(a, c) && leq(b, c)) return c;
    }
    throw Error(ErrorKind::InternalConsistency, "normal lattice is not closed under joins");
  }

  Node commutator_with_group(Node n) const { return comm_[n]; }
  Node pth_power(Node n) const { return pow_p_[n]; }
  Node two_pth_power(Node n) const { return pow_2p_[n]; }

  /// [N, _t P] for a node N.
  Node iterated_commutator(Node n, int t) const {
    for (int i = 0; i < t; ++i) n = comm_[n];
    return n;
  }

  /// N/K is powerfully embedded in P/K, for nodes K ≤ N.
  bool is_pe_mod(Node n, Node floor) const {
    return leq(comm_[n], join(pow_2p_[n], floor));
  }

  bool is_pe(Node n) const { return is_pe_mod(n, trivial()); }

  /// The largest X with floor ≤ X ≤ ceiling and X/floor powerfully embedded
  /// in P/floor. With floor = 1, ceiling = P this is η(P).
  Node eta_mod(Node floor, Node ceiling) const {
    Node acc = floor;
    for (Node x = 0; x < nodes_.size(); ++x) {
      if (leq(floor, x) && leq(x, ceiling) && is_pe_mod(x, floor)) acc = join(acc, x);
    }
    // A product of powerfully embedded subgroups is powerfully embedded.
    if (!is_pe_mod(acc, floor)) {
      throw Error(ErrorKind::InternalConsistency, "join of powerfully embedded subgroups is not");
    }
    return acc;
  }

  /// Greedy ascent floor = N_0 < N_1 < ... < N_k = n with
  /// N_{i+1} = eta_mod(N_i, n).
  std::vector<Node> greedy_series(Node n, Node floor = 0) const {
    if (!leq(floor, n)) throw Error(ErrorKind::BadParameter, "floor is not below the target");
    std::vector<Node> series{floor};
    while (series.back() != n) {
      Node next = eta_mod(series.back(), n);
      if (next == series.back()) {
        throw Error(ErrorKind::GreedyStalled, "relative eta ascent stalled below the target");
      }
      series.push_back(next);
    }
    return series;
  }

  int powerful_height(Node n) const { return static_cast<int>(greedy_series(n).size()) - 1; }

  /// pwc(P/K) for a node K.
  int powerful_class_mod(Node floor) const {
    return static_cast<int>(greedy_series(top(), floor).size()) - 1;
  }

  /// Minimal length of a chain floor = N_0 ≤ ... ≤ N_k = n of nodes with every
  /// factor N_{i+1}/N_i powerfully embedded in P/N_i (breadth-first search).
  int brute_force_pwh(Node n, Node floor = 0) const {
    std::vector<int> dist(nodes_.size(), -1);
    std::deque<Node> queue{floor};
    dist[floor] = 0;
    while (!queue.empty()) {
      Node x = queue.front();
      queue.pop_front();
      if (x == n) return dist[x];
      for (Node y = 0; y < nodes_.size(); ++y) {
        if (dist[y] >= 0 || !leq(x, y) || !leq(y, n)) continue;
        if (is_pe_mod(y, x)) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      }
    }
    throw Error(ErrorKind::InternalConsistency, "no eta-series reaches the target");
  }

 private:
  GroupPtr group_;
  unsigned p_;
  std::vector<Subgroup> nodes_;
  std::unordered_map<ElementSet, Node> index_;
  std::vector<Node> comm_;
  std::vector<Node> pow_p_;
  std::vector<Node> pow_2p_;
};

struct EtaProfile {
  unsigned p = 0;
  GroupPtr group;
  /// 1 = η_0 < η_1 < ... < η_pwc = P
  SeriesChain eta_series;
  int pwc = 0;
  bool small_powerful_class = false;
  bool is_powerful = false;

  /// η_i(P), equal to P for i ≥ pwc.
  const Subgroup& eta_term(std::size_t i) const {
    return eta_series.terms[std::min(i, eta_series.terms.size() - 1)];
  }
};

inline Subgroup eta(const EtaLattice& lattice) {
  Subgroup e = lattice.node(lattice.eta_mod(lattice.trivial(), lattice.top()));
  if (!center(whole(lattice.group())).is_subgroup_of(e)) {
    throw Error(ErrorKind::InternalConsistency, "eta(P) does not contain Z(P)");
  }
  return e;
}

/// η(P): the product of all powerfully embedded subgroups of P.
inline Subgroup eta(const GroupPtr& p_group, unsigned p, const Limits& limits = {}) {
  return eta(EtaLattice(p_group, p, limits));
}

/// Join of the powerfully embedded subgroups of P that lie inside N.
inline Subgroup eta_relative(const Subgroup& n, const EtaLattice& lattice) {
  return lattice.node(lattice.eta_mod(lattice.trivial(), lattice.index_of(n)));
}

inline Subgroup eta_relative(const Subgroup& n, const GroupPtr& p_group, unsigned p,
                             const Limits& limits = {}) {
  return eta_relative(n, EtaLattice(p_group, p, limits));
}

inline EtaProfile upper_eta_series(const EtaLattice& lattice) {
  EtaProfile profile;
  profile.p = lattice.prime();
  profile.group = lattice.group();
  profile.eta_series.kind = SeriesKind::eta_ascending;
  for (auto node : lattice.greedy_series(lattice.top())) {
    profile.eta_series.terms.push_back(lattice.node(node));
  }
  profile.pwc = static_cast<int>(profile.eta_series.size()) - 1;
  profile.small_powerful_class = profile.pwc < static_cast<int>(profile.p);
  profile.is_powerful = profile.pwc <= 1;
  if (profile.is_powerful != lattice.is_pe(lattice.top())) {
    throw Error(ErrorKind::InternalConsistency, "pwc <= 1 disagrees with [P,P] <= P^{2p}");
  }
  return profile;
}

inline EtaProfile upper_eta_series(const GroupPtr& p_group, unsigned p, const Limits& limits = {}) {
  return upper_eta_series(EtaLattice(p_group, p, limits));
}

/// pwh_P(N) by greedy relative η ascent.
inline int powerful_height(const Subgroup& n, const EtaLattice& lattice) {
  return lattice.powerful_height(lattice.index_of(n));
}

inline int powerful_height(const Subgroup& n, const GroupPtr& p_group, unsigned p,
                           const Limits& limits = {}) {
  return powerful_height(n, EtaLattice(p_group, p, limits));
}

/// pwh_P(N) by exhaustive search over chains of normal subgroups.
inline int brute_force_pwh(const Subgroup& n, const EtaLattice& lattice) {
  return lattice.brute_force_pwh(lattice.index_of(n));
}

inline int brute_force_pwh(const Subgroup& n, const GroupPtr& p_group, unsigned p,
                           const Limits& limits = {}) {
  return brute_force_pwh(n, EtaLattice(p_group, p, limits));
}

/// Outcome of a chain check; `failing_index` names the first bad step.
struct SeriesCheck {
  bool ok = true;
  std::optional<std::size_t> failing_index;
  std::string reason;

  explicit operator bool() const noexcept { return ok; }

  static SeriesCheck fail(std::size_t i, std::string why) { return {false, i, std::move(why)}; }
};

/// Checks 1 = N_0 ≤ N_1 ≤ ... with every N_{i+1}/N_i powerfully embedded in
/// P/N_i, i.e. [N_{i+1}, P] ≤ N_{i+1}^{2p} N_i. Index i names the factor
/// N_{i+1}/N_i.
inline SeriesCheck verify_eta_series(const SeriesChain& chain, const GroupPtr& p_group, unsigned p) {
  detail::require_p_group(p_group, p);
  if (chain.terms.empty() || !chain.terms.front().is_trivial()) {
    return SeriesCheck::fail(0, "series does not start at the trivial subgroup");
  }
  const Subgroup all = whole(p_group);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const Subgroup& lo = chain[i];
    const Subgroup& hi = chain[i + 1];
    if (hi.ambient() != p_group || !is_normal(hi)) return SeriesCheck::fail(i, "term is not normal");
    if (!lo.is_subgroup_of(hi)) return SeriesCheck::fail(i, "terms are not nested");
    const Subgroup bound = join(power_subgroup(hi, 2LL * p), lo);
    if (!commutator_subgroup(hi, all).is_subgroup_of(bound)) {
      return SeriesCheck::fail(i, "factor is not powerfully embedded");
    }
  }
  return {};
}

/// Checks N_1 ≥ N_2 ≥ ... ≥ N_k = 1 with [N_i, P] ≤ N_{i+1} and
/// [N_i, _t P] ≤ N_{i+1}^p for every i.
inline SeriesCheck verify_potent_filtration(const SeriesChain& chain, const GroupPtr& p_group,
                                            unsigned p, int t) {
  detail::require_p_group(p_group, p);
  if (t < 1) throw Error(ErrorKind::BadParameter, "potent filtration type must be >= 1");
  if (chain.terms.empty() || !chain.terms.back().is_trivial()) {
    return SeriesCheck::fail(chain.size() == 0 ? 0 : chain.size() - 1,
                             "filtration does not end at the trivial subgroup");
  }
  const Subgroup all = whole(p_group);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const Subgroup& cur = chain[i];
    const Subgroup& next = chain[i + 1];
    if (cur.ambient() != p_group || !is_normal(cur)) return SeriesCheck::fail(i, "term is not normal");
    if (!commutator_subgroup(cur, all).is_subgroup_of(next)) {
      return SeriesCheck::fail(i, "[N_i, P] is not contained in N_{i+1}");
    }
    if (!iterated_commutator(cur, all, t).is_subgroup_of(power_subgroup(next, p))) {
      return SeriesCheck::fail(i, "[N_i, _t P] is not contained in N_{i+1}^p");
    }
  }
  return {};
}

/// N ≥ N^2 ≥ N^4 ≥ N^8 ≥ ... ≥ 1 for N powerfully embedded in a 2-group P;
/// checked at runtime to be a potent filtration of type 1.
inline SeriesChain potent_filtration_p2(const Subgroup& n, const GroupPtr& p_group) {
  if (!is_powerfully_embedded(n, p_group, 2)) {
    throw Error(ErrorKind::NotPowerfullyEmbedded, "N is not powerfully embedded in P");
  }
  SeriesChain chain{SeriesKind::potent_descending, {n}, 1};
  for (long long k = 2; !chain.terms.back().is_trivial(); k *= 2) {
    chain.terms.push_back(power_subgroup(n, k));
  }
  if (!verify_potent_filtration(chain, p_group, 2, 1)) {
    throw Error(ErrorKind::InternalConsistency, "2-power series is not a potent filtration of type 1");
  }
  return chain;
}

/// For p > 3 and pwh_P(N) < p - 1: M_1 = N, M_{i+1} = M_i^p N_{p-i-2}, where
/// 1 = N_0 ≤ ... ≤ N_k = N is the greedy η-series of N padded by N_j = 1 for
/// j ≤ 0 and N_j = N for j ≥ k. The result is checked at runtime to be a
/// potent filtration of type p - 2.
inline SeriesChain potent_filtration_prop43(const Subgroup& n, const EtaLattice& lattice) {
  const unsigned p = lattice.prime();
  if (p <= 3) throw Error(ErrorKind::BadParameter, "this construction needs p > 3");
  const auto series = lattice.greedy_series(lattice.index_of(n));
  const int k = static_cast<int>(series.size()) - 1;
  if (k >= static_cast<int>(p) - 1) {
    throw Error(ErrorKind::HypothesisViolated,
                "pwh_P(N) = " + std::to_string(k) + " is not below p - 1");
  }
  auto padded = [&](int j) -> const Subgroup& {
    if (j <= 0) return lattice.node(lattice.trivial());
    return lattice.node(series[static_cast<std::size_t>(std::min(j, k))]);
  };
  SeriesChain chain{SeriesKind::potent_descending, {n}, static_cast<int>(p) - 2};
  for (int i = 1; !chain.terms.back().is_trivial(); ++i) {
    const int j = static_cast<int>(p) - i - 2;
    Subgroup next = join(power_subgroup(chain.terms.back(), p), padded(j));
    // Repeats are legal while padding terms are nontrivial; afterwards
    // M_{i+1} = M_i^p, which is proper for M_i != 1.
    if (j <= 0 && next == chain.terms.back()) {
      throw Error(ErrorKind::InternalConsistency, "filtration stalled above the trivial subgroup");
    }
    chain.terms.push_back(std::move(next));
  }
  if (!verify_potent_filtration(chain, lattice.group(), p, static_cast<int>(p) - 2)) {
    throw Error(ErrorKind::InternalConsistency, "constructed chain is not a potent filtration");
  }
  // Dropping M_{i+1} = M_i leaves the pair (M_i, M_{i+2}) with the conditions
  // already checked for (M_{i+1}, M_{i+2}).
  chain.terms.erase(std::unique(chain.terms.begin(), chain.terms.end()), chain.terms.end());
  return chain;
}

inline SeriesChain potent_filtration_prop43(const Subgroup& n, const GroupPtr& p_group, unsigned p,
                                            const Limits& limits = {}) {
  if (p <= 3) throw Error(ErrorKind::BadParameter, "this construction needs p > 3");
  return potent_filtration_prop43(n, EtaLattice(p_group, p, limits));
}

}  // namespace powclass
