#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "powclass/group.hpp"
#include "powclass/psylow.hpp"

// Deterministic constructors for concrete permutation groups. Each documents
// its point set; the same parameters always give the same generator arrays.
namespace powclass {

namespace detail {

inline std::vector<Point> identity_images(std::size_t n) {
  std::vector<Point> v(n);
  std::iota(v.begin(), v.end(), Point{0});
  return v;
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::BadParameter, what);
}

/// Right regular representation of a group given by an explicit
/// multiplication rule on {0, ..., n-1}.
template <typename Mul>
Permutation right_multiplication(std::size_t n, std::size_t g, Mul mul) {
  std::vector<Point> images(n);
  for (std::size_t x = 0; x < n; ++x) images[x] = static_cast<Point>(mul(x, g));
  return Permutation(std::move(images));
}

}  // namespace detail

/// C_n on {0..n-1} by the n-cycle.
inline GroupPtr cyclic(std::size_t n) {
  detail::require(n >= 1, "cyclic group needs n >= 1");
  std::vector<Permutation> gens;
  if (n > 1) {
    auto images = detail::identity_images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>((i + 1) % n);
    gens.emplace_back(std::move(images));
  }
  return Group::generate(n, std::move(gens), "C" + std::to_string(n));
}

/// (C_p)^k on k blocks of p points, one p-cycle per block.
inline GroupPtr elementary_abelian(unsigned p, unsigned k) {
  detail::require(is_prime(p) && k >= 1, "elementary_abelian needs a prime p and k >= 1");
  const std::size_t n = static_cast<std::size_t>(p) * k;
  std::vector<Permutation> gens;
  for (unsigned b = 0; b < k; ++b) {
    auto images = detail::identity_images(n);
    for (unsigned i = 0; i < p; ++i) images[b * p + i] = b * p + (i + 1) % p;
    gens.emplace_back(std::move(images));
  }
  std::string label = "C" + std::to_string(p) + "^" + std::to_string(k);
  return Group::generate(n, std::move(gens), label);
}

/// Dihedral group of order 2n acting on the n vertices of a polygon.
inline GroupPtr dihedral(std::size_t order) {
  detail::require(order >= 6 && order % 2 == 0, "dihedral(2n) needs 2n >= 6");
  const std::size_t n = order / 2;
  std::vector<Point> rot(n), ref(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<Point>((i + 1) % n);
    ref[i] = static_cast<Point>((n - i) % n);
  }
  return Group::generate(n, {Permutation(rot), Permutation(ref)}, "D" + std::to_string(order));
}

/// Generalized quaternion group Q_{4m} = <a, b | a^{2m}, b^2 = a^m, a^b = a^-1>
/// in its right regular representation; element a^i b^j is point i + 2m j.
inline GroupPtr quaternion(std::size_t order) {
  detail::require(order == 8 || order == 16, "quaternion group of order 8 or 16");
  const std::size_t m2 = order / 2;
  const std::size_t m = m2 / 2;
  auto mul = [&](std::size_t x, std::size_t y) {
    std::size_t i = x % m2, j = x / m2, k = y % m2, l = y / m2;
    if (j == 0) return (i + k) % m2 + m2 * l;
    std::size_t e = (i + m2 - k) % m2;
    if (l == 0) return e + m2;
    return (e + m) % m2;
  };
  return Group::generate(order,
                         {detail::right_multiplication(order, 1, mul),
                          detail::right_multiplication(order, m2, mul)},
                         "Q" + std::to_string(order));
}

/// SD16 = <a, b | a^8, b^2, a^b = a^3> on Z/8: a: i -> i+1, b: i -> 3i.
inline GroupPtr semidihedral(std::size_t order) {
  detail::require(order == 16, "semidihedral group of order 16 only");
  std::vector<Point> a(8), b(8);
  for (Point i = 0; i < 8; ++i) {
    a[i] = (i + 1) % 8;
    b[i] = (3 * i) % 8;
  }
  return Group::generate(8, {Permutation(a), Permutation(b)}, "SD16");
}

/// Extraspecial group of order p^3 for odd p. Exponent p: the Heisenberg
/// group as affine maps (x, y) -> (x + a y + c, y + b) of F_p^2, point x + p y.
/// Exponent p^2: C_{p^2} ⋊ C_p on Z/p^2 with a: i -> i+1, b: i -> (1+p) i.
inline GroupPtr extraspecial_p3(unsigned p, unsigned exponent) {
  detail::require(is_prime(p) && p % 2 == 1, "extraspecial_p3 needs an odd prime");
  if (exponent == p) {
    const std::size_t n = static_cast<std::size_t>(p) * p;
    std::vector<Point> shear(n), shift(n);
    for (Point y = 0; y < p; ++y) {
      for (Point x = 0; x < p; ++x) {
        shear[x + p * y] = (x + y) % p + p * y;
        shift[x + p * y] = x + p * ((y + 1) % p);
      }
    }
    return Group::generate(n, {Permutation(shear), Permutation(shift)},
                           "He" + std::to_string(p));
  }
  detail::require(exponent == p * p, "exponent must be p or p^2");
  const Point n = p * p;
  std::vector<Point> a(n), b(n);
  for (Point i = 0; i < n; ++i) {
    a[i] = (i + 1) % n;
    b[i] = static_cast<Point>((static_cast<std::size_t>(1 + p) * i) % n);
  }
  return Group::generate(n, {Permutation(a), Permutation(b)}, "M" + std::to_string(n * p));
}

/// C_p ≀ C_p on p^2 points, point = block * p + position. The base group is
/// generated by the p disjoint p-cycles (one per block); the top generator
/// permutes the blocks cyclically.
inline GroupPtr wreath_cpcp(unsigned p, const Limits& limits = {}) {
  detail::require(is_prime(p), "wreath_cpcp needs a prime");
  const std::size_t n = static_cast<std::size_t>(p) * p;
  std::vector<Permutation> gens;
  for (unsigned b = 0; b < p; ++b) {
    auto images = detail::identity_images(n);
    for (unsigned i = 0; i < p; ++i) images[b * p + i] = b * p + (i + 1) % p;
    gens.emplace_back(std::move(images));
  }
  std::vector<Point> top(n);
  for (unsigned b = 0; b < p; ++b) {
    for (unsigned i = 0; i < p; ++i) top[b * p + i] = ((b + 1) % p) * p + i;
  }
  gens.emplace_back(std::move(top));
  const std::string c = "C" + std::to_string(p);
  return Group::generate(n, std::move(gens), c + "wr" + c, limits.max_order);
}

/// S_n by (0 1) and the n-cycle.
inline GroupPtr symmetric(std::size_t n) {
  detail::require(n >= 1 && n <= 7, "symmetric(n) for 1 <= n <= 7");
  std::vector<Permutation> gens;
  if (n >= 2) {
    auto t = detail::identity_images(n);
    std::swap(t[0], t[1]);
    gens.emplace_back(std::move(t));
  }
  if (n >= 3) {
    auto c = detail::identity_images(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<Point>((i + 1) % n);
    gens.emplace_back(std::move(c));
  }
  return Group::generate(n, std::move(gens), "S" + std::to_string(n));
}

/// A_n by the 3-cycles (0 1 k), k = 2..n-1.
inline GroupPtr alternating(std::size_t n) {
  detail::require(n >= 1 && n <= 7, "alternating(n) for 1 <= n <= 7");
  std::vector<Permutation> gens;
  for (std::size_t k = 2; k < n; ++k) {
    auto c = detail::identity_images(n);
    c[0] = 1;
    c[1] = static_cast<Point>(k);
    c[k] = 0;
    gens.emplace_back(std::move(c));
  }
  return Group::generate(n, std::move(gens), "A" + std::to_string(n));
}

/// A x B on the disjoint union of the point sets (A's points first).
inline GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, const Limits& limits = {}) {
  const std::size_t da = a->degree(), db = b->degree();
  std::vector<Permutation> gens;
  for (const auto& g : a->generators()) {
    auto images = detail::identity_images(da + db);
    for (std::size_t i = 0; i < da; ++i) images[i] = g[i];
    gens.emplace_back(std::move(images));
  }
  for (const auto& g : b->generators()) {
    auto images = detail::identity_images(da + db);
    for (std::size_t i = 0; i < db; ++i) images[da + i] = static_cast<Point>(da + g[i]);
    gens.emplace_back(std::move(images));
  }
  return Group::generate(da + db, std::move(gens), a->label() + "x" + b->label(), limits.max_order);
}

/// AGL(1, q) = { x -> a x + b } on the q points of F_q, for prime q.
inline GroupPtr affine_frobenius(unsigned q) {
  detail::require(is_prime(q) && q >= 3, "affine_frobenius(q) needs an odd prime q");
  unsigned root = 2;
  for (;; ++root) {
    unsigned x = 1, k = 0;
    do {
      x = x * root % q;
      ++k;
    } while (x != 1);
    if (k == q - 1) break;
  }
  std::vector<Point> shift(q), scale(q);
  for (Point x = 0; x < q; ++x) {
    shift[x] = (x + 1) % q;
    scale[x] = (x * root) % q;
  }
  return Group::generate(q, {Permutation(shift), Permutation(scale)},
                         "AGL1_" + std::to_string(q));
}

namespace detail {

/// 2x2 matrices over F_3 acting on the 8 nonzero row vectors v -> v M;
/// vector (a, b) is point 3a + b - 1.
inline Permutation f3_matrix_action(unsigned m00, unsigned m01, unsigned m10, unsigned m11) {
  std::vector<Point> images(8);
  for (unsigned a = 0; a < 3; ++a) {
    for (unsigned b = 0; b < 3; ++b) {
      if (a == 0 && b == 0) continue;
      const unsigned c = (a * m00 + b * m10) % 3;
      const unsigned d = (a * m01 + b * m11) % 3;
      images[3 * a + b - 1] = 3 * c + d - 1;
    }
  }
  return Permutation(std::move(images));
}

}  // namespace detail

/// SL(2,3) on the nonzero vectors of F_3^2.
inline GroupPtr sl23() {
  return Group::generate(8, {detail::f3_matrix_action(1, 1, 0, 1), detail::f3_matrix_action(1, 0, 1, 1)},
                         "SL(2,3)");
}

/// GL(2,3) on the nonzero vectors of F_3^2.
inline GroupPtr gl23() {
  return Group::generate(8,
                         {detail::f3_matrix_action(1, 1, 0, 1), detail::f3_matrix_action(1, 0, 1, 1),
                          detail::f3_matrix_action(2, 0, 0, 1)},
                         "GL(2,3)");
}

/// Right regular representation: G acting on its own element ids.
inline GroupPtr regular_embedding(const GroupPtr& g) {
  std::vector<Permutation> gens;
  const std::size_t n = g->order();
  for (ElementId s : g->generator_ids()) {
    std::vector<Point> images(n);
    for (ElementId x = 0; x < n; ++x) images[x] = g->mul(x, s);
    gens.emplace_back(std::move(images));
  }
  return Group::generate(n, std::move(gens), "reg(" + g->label() + ")");
}

/// Group from explicit generators, for corpus entries with no constructor.
inline GroupPtr from_generators(std::string label, std::size_t degree, std::vector<Permutation> gens,
                                const Limits& limits = {}) {
  return Group::generate(degree, std::move(gens), std::move(label), limits.max_order);
}

}  // namespace powclass
