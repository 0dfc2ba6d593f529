#pragma once

#include <string>
#include <utility>
#include <vector>

#include "powclass/subgroup.hpp"

namespace powclass {

/// A map between enumerated groups, stored as a table over source ids.
class Homomorphism {
 public:
  Homomorphism() = default;
  Homomorphism(GroupPtr source, GroupPtr target, std::vector<ElementId> table)
      : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
    if (table_.size() != source_->order()) {
      throw Error(ErrorKind::BadParameter, "homomorphism table does not cover the source");
    }
  }

  const GroupPtr& source() const noexcept { return source_; }
  const GroupPtr& target() const noexcept { return target_; }
  const std::vector<ElementId>& table() const noexcept { return table_; }
  ElementId operator()(ElementId x) const { return table_[x]; }

  Subgroup image(const Subgroup& s) const {
    if (s.ambient() != source_) throw Error(ErrorKind::AmbientMismatch, "image of a foreign subgroup");
    SubgroupBuilder b(target_);
    for (ElementId g : s.generators()) b.add(table_[g]);
    return b.build();
  }

  Subgroup preimage(const Subgroup& t) const {
    if (t.ambient() != target_) {
      throw Error(ErrorKind::AmbientMismatch, "preimage of a foreign subgroup");
    }
    ElementSet members(source_->order());
    for (ElementId x = 0; x < table_.size(); ++x) {
      if (t.contains(table_[x])) members.set(x);
    }
    return from_members(source_, members);
  }

  Subgroup kernel() const { return preimage(trivial_subgroup(target_)); }

  /// Exhaustive check of map(xy) = map(x) map(y).
  bool is_homomorphism() const {
    const auto n = static_cast<ElementId>(source_->order());
    for (ElementId x = 0; x < n; ++x) {
      for (ElementId y = 0; y < n; ++y) {
        if (table_[source_->mul(x, y)] != target_->mul(table_[x], table_[y])) return false;
      }
    }
    return true;
  }

  bool is_bijective() const {
    if (source_->order() != target_->order()) return false;
    std::vector<bool> hit(target_->order(), false);
    for (ElementId y : table_) {
      if (hit[y]) return false;
      hit[y] = true;
    }
    return true;
  }

 private:
  GroupPtr source_;
  GroupPtr target_;
  std::vector<ElementId> table_;
};

struct Quotient {
  GroupPtr group;
  Homomorphism projection;
};

/// G/N realized as the action of G on the right cosets of N; the quotient
/// has degree [G:N] and the projection has kernel exactly N.
inline Quotient quotient(const GroupPtr& g, const Subgroup& n) {
  if (n.ambient() != g) throw Error(ErrorKind::AmbientMismatch, "normal subgroup of another group");
  if (!is_normal(n)) throw Error(ErrorKind::NotNormal, "quotient by a non-normal subgroup");

  constexpr ElementId kUnset = ~ElementId{0};
  const auto order = static_cast<ElementId>(g->order());
  std::vector<ElementId> coset_of(order, kUnset);
  std::vector<ElementId> reps;
  for (ElementId e = 0; e < order; ++e) {
    if (coset_of[e] != kUnset) continue;
    const auto c = static_cast<ElementId>(reps.size());
    reps.push_back(e);
    for (ElementId m : n.elements()) coset_of[g->mul(m, e)] = c;
  }
  const std::size_t index = reps.size();

  auto action = [&](ElementId x) {
    std::vector<Point> images(index);
    for (std::size_t c = 0; c < index; ++c) images[c] = coset_of[g->mul(reps[c], x)];
    return Permutation::from_trusted(std::move(images));
  };

  std::vector<Permutation> gens;
  for (ElementId s : g->generator_ids()) gens.push_back(action(s));
  auto q = Group::generate(index, std::move(gens),
                           g->label() + "/N" + std::to_string(n.order()));

  std::vector<ElementId> coset_image(index);
  for (std::size_t c = 0; c < index; ++c) coset_image[c] = q->id_of(action(reps[c]));
  std::vector<ElementId> table(order);
  for (ElementId e = 0; e < order; ++e) table[e] = coset_image[coset_of[e]];
  return {q, Homomorphism(g, q, std::move(table))};
}

}  // namespace powclass
