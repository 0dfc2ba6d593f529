#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "powclass/error.hpp"

namespace powclass {

using Point = std::uint32_t;

/// A bijection of {0, ..., n-1}, stored as its image array.
///
/// Products act on the right: point i is sent by `a * b` to `b[a[i]]`, so
/// `a * b` means "apply a, then b". Conjugation is `x^g = g^-1 x g` and the
/// commutator is `[a, b] = a^-1 b^-1 a b`.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), Point{0});
  }

  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (Point x : images_) {
      if (x >= images_.size() || seen[x]) {
        throw Error(ErrorKind::BadParameter, "image array is not a bijection");
      }
      seen[x] = true;
    }
  }

  Permutation(std::initializer_list<Point> images)
      : Permutation(std::vector<Point>(images)) {}

  /// Builds a permutation of the given degree from disjoint cycles,
  /// e.g. `from_cycles(4, {{0, 1, 2, 3}})`.
  static Permutation from_cycles(std::size_t degree,
                                 std::initializer_list<std::initializer_list<Point>> cycles) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    std::vector<bool> moved(degree, false);
    for (const auto& cycle : cycles) {
      std::vector<Point> c(cycle);
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] >= degree || moved[c[k]]) {
          throw Error(ErrorKind::BadParameter, "cycles are not disjoint or exceed the degree");
        }
        moved[c[k]] = true;
        images[c[k]] = c[(k + 1) % c.size()];
      }
    }
    return Permutation(std::move(images));
  }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) return false;
    }
    return true;
  }

  Permutation operator*(const Permutation& rhs) const {
    if (rhs.degree() != degree()) {
      throw Error(ErrorKind::DegreeMismatch, "cannot compose permutations of different degree");
    }
    std::vector<Point> out(degree());
    for (std::size_t i = 0; i < degree(); ++i) out[i] = rhs.images_[images_[i]];
    return from_trusted(std::move(out));
  }

  Permutation inverse() const {
    std::vector<Point> out(degree());
    for (std::size_t i = 0; i < degree(); ++i) out[images_[i]] = static_cast<Point>(i);
    return from_trusted(std::move(out));
  }

  /// Power with an arbitrary (possibly negative) exponent, computed along cycles.
  Permutation pow(long long k) const {
    std::vector<Point> out(degree());
    std::vector<bool> done(degree(), false);
    std::vector<Point> cycle;
    for (std::size_t start = 0; start < degree(); ++start) {
      if (done[start]) continue;
      cycle.clear();
      for (Point x = static_cast<Point>(start); !done[x]; x = images_[x]) {
        done[x] = true;
        cycle.push_back(x);
      }
      const long long len = static_cast<long long>(cycle.size());
      const long long shift = ((k % len) + len) % len;
      for (long long j = 0; j < len; ++j) {
        out[cycle[j]] = cycle[(j + shift) % len];
      }
    }
    return from_trusted(std::move(out));
  }

  /// Order as the lcm of cycle lengths.
  std::uint64_t order() const {
    std::uint64_t result = 1;
    std::vector<bool> done(degree(), false);
    for (std::size_t start = 0; start < degree(); ++start) {
      if (done[start]) continue;
      std::uint64_t len = 0;
      for (Point x = static_cast<Point>(start); !done[x]; x = images_[x]) {
        done[x] = true;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  /// Cycle notation with 0-based points; the identity prints as "()".
  std::string to_string() const {
    std::ostringstream os;
    std::vector<bool> done(degree(), false);
    bool any = false;
    for (std::size_t start = 0; start < degree(); ++start) {
      if (done[start] || images_[start] == start) continue;
      any = true;
      os << '(';
      bool first = true;
      for (Point x = static_cast<Point>(start); !done[x]; x = images_[x]) {
        done[x] = true;
        if (!first) os << ' ';
        os << x;
        first = false;
      }
      os << ')';
    }
    if (!any) os << "()";
    return os.str();
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  /// Skips validation; callers guarantee `images` is a bijection.
  static Permutation from_trusted(std::vector<Point> images) {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

 private:
  std::vector<Point> images_;
};

inline Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

inline Permutation conjugate(const Permutation& x, const Permutation& g) {
  return g.inverse() * x * g;
}

}  // namespace powclass
