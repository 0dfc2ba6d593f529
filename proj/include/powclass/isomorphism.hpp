#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "powclass/commutators.hpp"
#include "powclass/homomorphism.hpp"
#include "powclass/lattice.hpp"

namespace powclass {

/// Cheap isomorphism invariants compared before any search.
struct GroupInvariants {
  std::size_t order = 0;
  std::map<std::uint64_t, std::size_t> order_profile;
  std::size_t center_order = 0;
  std::size_t derived_order = 0;
  std::uint64_t exponent = 1;

  friend bool operator==(const GroupInvariants&, const GroupInvariants&) = default;
};

inline GroupInvariants invariants(const GroupPtr& g) {
  GroupInvariants inv;
  inv.order = g->order();
  for (ElementId x = 0; x < g->order(); ++x) {
    const auto o = g->element_order(x);
    ++inv.order_profile[o];
    inv.exponent = std::lcm(inv.exponent, o);
  }
  inv.center_order = center(g).order();
  inv.derived_order = derived_subgroup(g).order();
  return inv;
}

namespace detail {

/// Per-element signature: (element order, conjugacy class size).
inline std::vector<std::pair<std::uint64_t, std::size_t>> element_signatures(const GroupPtr& g) {
  std::vector<std::pair<std::uint64_t, std::size_t>> sig(g->order());
  for (const auto& cls : conjugacy_classes(whole(g))) {
    for (ElementId x : cls) sig[x] = {g->element_order(x), cls.size()};
  }
  return sig;
}

class IsoSearch {
 public:
  IsoSearch(GroupPtr a, GroupPtr b) : a_(std::move(a)), b_(std::move(b)) {
    // Greedy generating set, longest elements first.
    std::vector<ElementId> by_order(a_->order());
    std::iota(by_order.begin(), by_order.end(), ElementId{0});
    std::stable_sort(by_order.begin(), by_order.end(), [&](ElementId x, ElementId y) {
      return a_->element_order(x) > a_->element_order(y);
    });
    SubgroupBuilder builder(a_);
    for (ElementId x : by_order) {
      if (builder.order() == a_->order()) break;
      if (builder.add(x)) gens_.push_back(x);
    }
    auto sig_a = element_signatures(a_);
    auto sig_b = element_signatures(b_);
    candidates_.resize(gens_.size());
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      for (ElementId y = 0; y < b_->order(); ++y) {
        if (sig_b[y] == sig_a[gens_[i]]) candidates_[i].push_back(y);
      }
    }
    images_.resize(gens_.size());
  }

  std::optional<Homomorphism> run() {
    if (!search(0)) return std::nullopt;
    return Homomorphism(a_, b_, table_);
  }

 private:
  bool search(std::size_t i) {
    if (i == gens_.size()) return consistent(i);
    for (ElementId c : candidates_[i]) {
      images_[i] = c;
      if (consistent(i + 1) && search(i + 1)) return true;
    }
    return false;
  }

  /// Extends the assignment along the Cayley graph of <gens_[0..k)> and
  /// fails on any clash or loss of injectivity.
  bool consistent(std::size_t k) {
    constexpr ElementId kUnset = ~ElementId{0};
    table_.assign(a_->order(), kUnset);
    std::vector<char> used(b_->order(), 0);
    std::vector<ElementId> queue{Group::identity()};
    table_[Group::identity()] = Group::identity();
    used[Group::identity()] = 1;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const ElementId x = queue[q];
      for (std::size_t j = 0; j < k; ++j) {
        const ElementId y = a_->mul(x, gens_[j]);
        const ElementId img = b_->mul(table_[x], images_[j]);
        if (table_[y] == kUnset) {
          if (used[img]) return false;
          used[img] = 1;
          table_[y] = img;
          queue.push_back(y);
        } else if (table_[y] != img) {
          return false;
        }
      }
    }
    return true;
  }

  GroupPtr a_;
  GroupPtr b_;
  std::vector<ElementId> gens_;
  std::vector<std::vector<ElementId>> candidates_;
  std::vector<ElementId> images_;
  std::vector<ElementId> table_;
};

}  // namespace detail

/// An isomorphism A -> B when one exists. Backtracks over images of a
/// greedy generating set of A, restricted to elements of B with the same
/// order and class size, after comparing order profiles, center, derived
/// subgroup and exponent.
inline std::optional<Homomorphism> find_isomorphism(const GroupPtr& a, const GroupPtr& b,
                                                    const Limits& limits = {}) {
  if (a->order() > limits.max_iso_order || b->order() > limits.max_iso_order) {
    throw Error(ErrorKind::CapExceeded, "isomorphism test is capped at order " +
                                            std::to_string(limits.max_iso_order));
  }
  if (a->order() != b->order()) return std::nullopt;
  if (invariants(a) != invariants(b)) return std::nullopt;
  return detail::IsoSearch(a, b).run();
}

inline bool is_isomorphic(const GroupPtr& a, const GroupPtr& b, const Limits& limits = {}) {
  return find_isomorphism(a, b, limits).has_value();
}

}  // namespace powclass
