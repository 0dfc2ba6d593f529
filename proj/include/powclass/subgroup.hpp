#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "powclass/error.hpp"
#include "powclass/group.hpp"

namespace powclass {

using ElementSet = boost::dynamic_bitset<std::uint64_t>;

/// A subgroup of an ambient Group, held as a member bitset over the
/// ambient's element ids together with a (small) generating set.
class Subgroup {
 public:
  Subgroup() = default;

  /// Trusted constructor: `members` must be closed and generated by `gens`.
  Subgroup(GroupPtr ambient, ElementSet members, std::vector<ElementId> gens)
      : ambient_(std::move(ambient)), members_(std::move(members)), generators_(std::move(gens)) {
    elements_.reserve(members_.count());
    for (auto i = members_.find_first(); i != ElementSet::npos; i = members_.find_next(i)) {
      elements_.push_back(static_cast<ElementId>(i));
    }
  }

  const GroupPtr& ambient() const noexcept { return ambient_; }
  const ElementSet& members() const noexcept { return members_; }
  /// Member ids in increasing order.
  const std::vector<ElementId>& elements() const noexcept { return elements_; }
  const std::vector<ElementId>& generators() const noexcept { return generators_; }
  std::size_t order() const noexcept { return elements_.size(); }
  bool contains(ElementId id) const { return members_.test(id); }
  bool is_trivial() const noexcept { return elements_.size() == 1; }
  bool is_whole() const noexcept { return ambient_ && elements_.size() == ambient_->order(); }

  bool is_subgroup_of(const Subgroup& other) const {
    return ambient_ == other.ambient_ && members_.is_subset_of(other.members_);
  }

  std::vector<Permutation> generator_permutations() const {
    std::vector<Permutation> out;
    out.reserve(generators_.size());
    for (ElementId g : generators_) out.push_back(ambient_->permutation(g));
    return out;
  }

  /// A standalone Group with the same elements (and the same degree).
  GroupPtr as_group(std::string label = {}) const {
    if (is_whole() && label.empty()) return ambient_;
    std::vector<Permutation> elems;
    elems.reserve(order());
    for (ElementId e : elements_) elems.push_back(ambient_->permutation(e));
    return Group::from_elements(ambient_->degree(), generator_permutations(), elems,
                                label.empty() ? ambient_->label() + "-sub" : std::move(label));
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.ambient_ == b.ambient_ && a.members_ == b.members_;
  }

 private:
  GroupPtr ambient_;
  ElementSet members_;
  std::vector<ElementId> elements_;
  std::vector<ElementId> generators_;
};

struct SubgroupHash {
  std::size_t operator()(const Subgroup& s) const {
    return std::hash<ElementSet>{}(s.members());
  }
};

inline void require_same_ambient(const Subgroup& a, const Subgroup& b) {
  if (a.ambient() != b.ambient()) {
    throw Error(ErrorKind::AmbientMismatch, "subgroups live in different ambient groups");
  }
}

/// Incremental closure: adding an element extends the current subgroup to the
/// subgroup generated by it and everything added before. Only genuinely new
/// elements become generators, so generating sets stay logarithmic in size.
class SubgroupBuilder {
 public:
  explicit SubgroupBuilder(GroupPtr group)
      : group_(std::move(group)), members_(group_->order()) {
    members_.set(Group::identity());
    list_.push_back(Group::identity());
  }

  explicit SubgroupBuilder(const Subgroup& start)
      : group_(start.ambient()),
        members_(start.members()),
        list_(start.elements()),
        gens_(start.generators()) {}

  bool contains(ElementId x) const { return members_.test(x); }
  std::size_t order() const noexcept { return list_.size(); }
  const std::vector<ElementId>& generators() const noexcept { return gens_; }

  /// Returns false when x was already a member.
  bool add(ElementId x) {
    if (members_.test(x)) return false;
    gens_.push_back(x);
    const std::size_t old_size = list_.size();
    for (std::size_t i = 0; i < list_.size(); ++i) {
      const ElementId e = list_[i];
      if (i < old_size) {
        push(group_->mul(e, x));
      } else {
        for (ElementId s : gens_) push(group_->mul(e, s));
      }
    }
    return true;
  }

  template <typename Range>
  void add_all(const Range& xs) {
    for (ElementId x : xs) add(x);
  }

  Subgroup build() const { return Subgroup(group_, members_, gens_); }

 private:
  void push(ElementId y) {
    if (!members_.test(y)) {
      members_.set(y);
      list_.push_back(y);
    }
  }

  GroupPtr group_;
  ElementSet members_;
  std::vector<ElementId> list_;
  std::vector<ElementId> gens_;
};

inline Subgroup whole(const GroupPtr& g) {
  ElementSet all(g->order());
  all.set();
  std::vector<ElementId> gens;
  for (ElementId id : g->generator_ids()) {
    if (id != Group::identity()) gens.push_back(id);
  }
  return Subgroup(g, std::move(all), std::move(gens));
}

inline Subgroup trivial_subgroup(const GroupPtr& g) { return SubgroupBuilder(g).build(); }

inline Subgroup generated(const GroupPtr& g, std::span<const ElementId> gens) {
  SubgroupBuilder b(g);
  for (ElementId x : gens) b.add(x);
  return b.build();
}

inline Subgroup generated(const GroupPtr& g, const std::vector<Permutation>& gens) {
  SubgroupBuilder b(g);
  for (const auto& p : gens) b.add(g->id_of(p));
  return b.build();
}

/// Subgroup with a known member set; a generating set is rebuilt greedily.
inline Subgroup from_members(const GroupPtr& g, const ElementSet& members) {
  SubgroupBuilder b(g);
  for (auto i = members.find_first(); i != ElementSet::npos; i = members.find_next(i)) {
    b.add(static_cast<ElementId>(i));
  }
  Subgroup s = b.build();
  if (s.members() != members) {
    throw Error(ErrorKind::InternalConsistency, "member set is not closed");
  }
  return s;
}

/// <A ∪ B>
inline Subgroup join(const Subgroup& a, const Subgroup& b) {
  require_same_ambient(a, b);
  if (b.is_subgroup_of(a)) return a;
  if (a.is_subgroup_of(b)) return b;
  SubgroupBuilder builder(a.order() >= b.order() ? a : b);
  builder.add_all((a.order() >= b.order() ? b : a).generators());
  return builder.build();
}

inline Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  require_same_ambient(a, b);
  if (a.is_subgroup_of(b)) return a;
  if (b.is_subgroup_of(a)) return b;
  return from_members(a.ambient(), a.members() & b.members());
}

/// True when every generator of `by` normalizes h.
inline bool is_normalized_by(const Subgroup& h, const Subgroup& by) {
  require_same_ambient(h, by);
  const auto& g = *h.ambient();
  for (ElementId u : by.generators()) {
    for (ElementId s : h.generators()) {
      if (!h.contains(g.conj(s, u))) return false;
    }
  }
  return true;
}

/// h ⊴ universe (h must lie inside universe).
inline bool is_normal_in(const Subgroup& h, const Subgroup& universe) {
  return h.is_subgroup_of(universe) && is_normalized_by(h, universe);
}

inline bool is_normal(const Subgroup& h) { return is_normalized_by(h, whole(h.ambient())); }

/// Smallest subgroup of `universe` containing `seeds` and normalized by `universe`.
inline Subgroup normal_closure(const Subgroup& universe, std::span<const ElementId> seeds) {
  const auto& g = *universe.ambient();
  SubgroupBuilder b(universe.ambient());
  for (ElementId x : seeds) {
    if (!universe.contains(x)) {
      throw Error(ErrorKind::NotMember, "normal closure seed outside the universe");
    }
    b.add(x);
  }
  // Conjugating the current generators is enough; new generators are appended
  // to the same list, so the loop picks them up too.
  for (std::size_t i = 0; i < b.generators().size(); ++i) {
    const ElementId s = b.generators()[i];
    for (ElementId u : universe.generators()) b.add(g.conj(s, u));
  }
  return b.build();
}

inline Subgroup normal_closure(const GroupPtr& g, std::span<const ElementId> seeds) {
  return normal_closure(whole(g), seeds);
}

inline Subgroup conjugate(const Subgroup& h, ElementId x) {
  const auto& g = *h.ambient();
  ElementSet members(g.order());
  for (ElementId e : h.elements()) members.set(g.conj(e, x));
  std::vector<ElementId> gens;
  for (ElementId s : h.generators()) gens.push_back(g.conj(s, x));
  return Subgroup(h.ambient(), std::move(members), std::move(gens));
}

/// N_U(H) = { u in U : H^u = H }
inline Subgroup normalizer(const Subgroup& universe, const Subgroup& h) {
  require_same_ambient(universe, h);
  const auto& g = *universe.ambient();
  ElementSet members(g.order());
  for (ElementId u : universe.elements()) {
    bool ok = true;
    for (ElementId s : h.generators()) {
      if (!h.contains(g.conj(s, u))) {
        ok = false;
        break;
      }
    }
    if (ok) members.set(u);
  }
  return from_members(universe.ambient(), members);
}

inline Subgroup normalizer(const GroupPtr& g, const Subgroup& h) { return normalizer(whole(g), h); }

/// C_U(S) = { u in U : us = su for all s in S }
inline Subgroup centralizer(const Subgroup& universe, std::span<const ElementId> s) {
  const auto& g = *universe.ambient();
  ElementSet members(g.order());
  for (ElementId u : universe.elements()) {
    bool ok = true;
    for (ElementId x : s) {
      if (g.mul(u, x) != g.mul(x, u)) {
        ok = false;
        break;
      }
    }
    if (ok) members.set(u);
  }
  return from_members(universe.ambient(), members);
}

inline Subgroup centralizer(const GroupPtr& g, std::span<const ElementId> s) {
  return centralizer(whole(g), s);
}

/// Re-expresses h inside another group of the same degree that contains it.
inline Subgroup transport(const Subgroup& h, const GroupPtr& target) {
  if (h.ambient() == target) return h;
  if (h.ambient()->degree() != target->degree()) {
    throw Error(ErrorKind::DegreeMismatch, "cannot transport between degrees");
  }
  ElementSet members(target->order());
  for (ElementId e : h.elements()) {
    auto id = target->find(h.ambient()->element(e));
    if (!id) throw Error(ErrorKind::NotMember, "subgroup is not contained in the target group");
    members.set(*id);
  }
  std::vector<ElementId> gens;
  for (ElementId s : h.generators()) gens.push_back(*target->find(h.ambient()->element(s)));
  return Subgroup(target, std::move(members), std::move(gens));
}

}  // namespace powclass
