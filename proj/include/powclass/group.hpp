#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "powclass/error.hpp"
#include "powclass/permutation.hpp"

namespace powclass {

/// Enumeration bounds. Every operation that can blow up takes one of these.
struct Limits {
  std::size_t max_order = 200'000;
  std::size_t max_lattice_joins = 100'000;
  std::size_t max_iso_order = 512;
  std::size_t max_subgroups = 100'000;
};

using ElementId = std::uint32_t;

class Group;
using GroupPtr = std::shared_ptr<const Group>;

namespace detail {

inline std::uint64_t hash_points(std::span<const Point> pts) noexcept {
  std::uint64_t h = 0x9E3779B97F4A7C15ull ^ pts.size();
  for (Point x : pts) {
    h ^= x + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  }
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdull;
  h ^= h >> 33;
  return h;
}

inline void power_into(std::span<const Point> src, long long k, std::span<Point> out,
                       std::vector<Point>& cycle, std::vector<char>& done) {
  const std::size_t n = src.size();
  done.assign(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    if (done[start]) continue;
    cycle.clear();
    for (Point x = static_cast<Point>(start); !done[x]; x = src[x]) {
      done[x] = 1;
      cycle.push_back(x);
    }
    const long long len = static_cast<long long>(cycle.size());
    const long long shift = ((k % len) + len) % len;
    for (long long j = 0; j < len; ++j) out[cycle[j]] = cycle[(j + shift) % len];
  }
}

}  // namespace detail

/// A finite permutation group with its element set enumerated eagerly at
/// construction. Elements are addressed by dense ids in breadth-first order
/// from the identity (id 0), so a Group is immutable once built and may be
/// shared freely between threads.
class Group {
  struct Passkey {};

 public:
  Group(Passkey, std::size_t degree, std::vector<Permutation> gens, std::string label)
      : degree_(degree), generators_(std::move(gens)), label_(std::move(label)) {}

  /// Closure of `gens` under right multiplication, starting from the identity.
  static GroupPtr generate(std::size_t degree, std::vector<Permutation> gens,
                           std::string label = {}, std::size_t cap = Limits{}.max_order) {
    if (degree == 0) throw Error(ErrorKind::BadParameter, "degree must be positive");
    for (const auto& g : gens) {
      if (g.degree() != degree) {
        throw Error(ErrorKind::DegreeMismatch,
                    "generator of degree " + std::to_string(g.degree()) + " in a group of degree " +
                        std::to_string(degree));
      }
    }
    auto group = std::make_shared<Group>(Passkey{}, degree, std::move(gens), std::move(label));
    group->enumerate(cap);
    return group;
  }

  /// Wraps an element list already known to be closed (identity included).
  static GroupPtr from_elements(std::size_t degree, std::vector<Permutation> gens,
                                const std::vector<Permutation>& elements, std::string label = {}) {
    auto group = std::make_shared<Group>(Passkey{}, degree, std::move(gens), std::move(label));
    group->storage_.reserve(elements.size() * degree);
    group->add(Permutation(degree).images());
    for (const auto& e : elements) {
      if (e.degree() != degree) throw Error(ErrorKind::DegreeMismatch, "element degree mismatch");
      if (!group->find(e.images())) group->add(e.images());
    }
    group->finish();
    return group;
  }

  const std::string& label() const noexcept { return label_; }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return count_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<ElementId>& generator_ids() const noexcept { return generator_ids_; }

  static constexpr ElementId identity() noexcept { return 0; }

  std::span<const Point> element(ElementId id) const {
    return {storage_.data() + static_cast<std::size_t>(id) * degree_, degree_};
  }

  Permutation permutation(ElementId id) const {
    auto e = element(id);
    return Permutation::from_trusted(std::vector<Point>(e.begin(), e.end()));
  }

  std::optional<ElementId> find(std::span<const Point> images) const {
    if (images.size() != degree_ || slots_.empty()) return std::nullopt;
    std::size_t mask = slots_.size() - 1;
    for (std::size_t s = detail::hash_points(images) & mask;; s = (s + 1) & mask) {
      ElementId slot = slots_[s];
      if (slot == kEmpty) return std::nullopt;
      auto e = element(slot);
      if (std::equal(e.begin(), e.end(), images.begin())) return slot;
    }
  }

  ElementId id_of(const Permutation& p) const {
    auto id = find(p.images());
    if (!id) throw Error(ErrorKind::NotMember, p.to_string() + " is not in " + label_);
    return *id;
  }

  bool contains(const Permutation& p) const { return find(p.images()).has_value(); }

  ElementId mul(ElementId a, ElementId b) const {
    auto x = element(a);
    auto y = element(b);
    auto& buf = scratch();
    for (std::size_t i = 0; i < degree_; ++i) buf[i] = y[x[i]];
    return lookup(buf);
  }

  ElementId inv(ElementId a) const { return inverse_[a]; }

  /// g^-1 x g
  ElementId conj(ElementId x, ElementId g) const {
    auto xs = element(x);
    auto gs = element(g);
    auto gi = element(inverse_[g]);
    auto& buf = scratch();
    for (std::size_t i = 0; i < degree_; ++i) buf[i] = gs[xs[gi[i]]];
    return lookup(buf);
  }

  /// a^-1 b^-1 a b
  ElementId comm(ElementId a, ElementId b) const {
    auto as = element(a);
    auto bs = element(b);
    auto ai = element(inverse_[a]);
    auto bi = element(inverse_[b]);
    auto& buf = scratch();
    for (std::size_t i = 0; i < degree_; ++i) buf[i] = bs[as[bi[ai[i]]]];
    return lookup(buf);
  }

  ElementId pow(ElementId a, long long k) const {
    thread_local std::vector<Point> cycle;
    thread_local std::vector<char> done;
    auto& buf = scratch();
    detail::power_into(element(a), k, buf, cycle, done);
    return lookup(buf);
  }

  std::uint64_t element_order(ElementId a) const { return orders_[a]; }

 private:
  static constexpr ElementId kEmpty = ~ElementId{0};

  std::vector<Point>& scratch() const {
    thread_local std::vector<Point> buf;
    if (buf.size() < degree_) buf.resize(degree_);
    return buf;
  }

  ElementId lookup(const std::vector<Point>& buf) const {
    auto id = find(std::span<const Point>(buf.data(), degree_));
    if (!id) throw Error(ErrorKind::InternalConsistency, "product left the group " + label_);
    return *id;
  }

  void rehash(std::size_t capacity) {
    slots_.assign(capacity, kEmpty);
    std::size_t mask = capacity - 1;
    for (ElementId id = 0; id < count_; ++id) {
      std::size_t s = detail::hash_points(element(id)) & mask;
      while (slots_[s] != kEmpty) s = (s + 1) & mask;
      slots_[s] = id;
    }
  }

  ElementId add(std::span<const Point> images) {
    ElementId id = static_cast<ElementId>(count_);
    storage_.insert(storage_.end(), images.begin(), images.end());
    ++count_;
    if (2 * count_ > slots_.size()) {
      rehash(std::max<std::size_t>(16, slots_.size() * 2));
    } else {
      std::size_t mask = slots_.size() - 1;
      std::size_t s = detail::hash_points(images) & mask;
      while (slots_[s] != kEmpty) s = (s + 1) & mask;
      slots_[s] = id;
    }
    return id;
  }

  void enumerate(std::size_t cap) {
    std::vector<Point> buf(degree_);
    add(Permutation(degree_).images());
    for (ElementId cur = 0; cur < count_; ++cur) {
      for (const auto& g : generators_) {
        auto x = element(cur);
        for (std::size_t i = 0; i < degree_; ++i) buf[i] = g[x[i]];
        if (!find(buf)) {
          if (count_ >= cap) {
            throw Error(ErrorKind::CapExceeded,
                        "group " + label_ + " exceeds the enumeration cap of " + std::to_string(cap));
          }
          add(buf);
        }
      }
    }
    finish();
  }

  void finish() {
    std::vector<Point> buf(degree_);
    inverse_.resize(count_);
    orders_.resize(count_);
    for (ElementId id = 0; id < count_; ++id) {
      auto x = element(id);
      for (std::size_t i = 0; i < degree_; ++i) buf[x[i]] = static_cast<Point>(i);
      auto inv = find(buf);
      if (!inv) throw Error(ErrorKind::InternalConsistency, "element set is not closed under inverses");
      inverse_[id] = *inv;
      orders_[id] = permutation(id).order();
    }
    generator_ids_.clear();
    for (const auto& g : generators_) {
      auto id = find(g.images());
      if (!id) throw Error(ErrorKind::InternalConsistency, "generator missing from element set");
      generator_ids_.push_back(*id);
    }
  }

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::string label_;
  std::vector<ElementId> generator_ids_;
  std::vector<Point> storage_;
  std::size_t count_ = 0;
  std::vector<ElementId> slots_;
  std::vector<ElementId> inverse_;
  std::vector<std::uint64_t> orders_;
};

}  // namespace powclass
