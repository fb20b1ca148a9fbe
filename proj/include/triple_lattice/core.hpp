#pragma once

// Domain types and the forward, inverse and primitivity maps of the (m, n)
// lattice parameterisation of Pythagorean triples.
//
// The lattice point (m, n) with m, n >= 1 maps to
//
//     a = (2m-1)(2n + 2m-1),   b = 2n(n + 2m-1),   c = 2n^2 + a
//
// which is the unique triple with odd a, even b, odd c satisfying
// c - b = (2m-1)^2 and c - a = 2n^2. Replacing 2m-1 by an arbitrary positive
// integer mu gives the extended lattice, which covers every triple produced
// by Euclid's formula.

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "arith.hpp"
#include "error.hpp"

namespace triple_lattice {

/// A Pythagorean triple (a, b, c) with legs stored in the order given.
/// Construction verifies a^2 + b^2 = c^2 exactly.
class Triple {
 public:
  Triple(u64 a, u64 b, u64 c) : a_(a), b_(b), c_(c) {
    if (a == 0 || b == 0 || c == 0)
      throw error(errc::not_a_triple, "components must be positive: " + to_string());
    if (!(c > a && c > b))
      throw error(errc::not_a_triple, "hypotenuse must exceed both legs: " + to_string());
    if (arith::square_wide(c) - arith::square_wide(a) != arith::square_wide(b))
      throw error(errc::not_a_triple, "a^2 + b^2 != c^2 for " + to_string());
  }

  u64 a() const noexcept { return a_; }
  u64 b() const noexcept { return b_; }
  u64 c() const noexcept { return c_; }

  Triple swapped_legs() const { return Triple(b_, a_, c_); }

  std::string to_string() const {
    return "(" + std::to_string(a_) + "," + std::to_string(b_) + "," + std::to_string(c_) + ")";
  }

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;

 private:
  u64 a_;
  u64 b_;
  u64 c_;
};

inline std::ostream& operator<<(std::ostream& os, const Triple& t) { return os << t.to_string(); }

/// Orders by hypotenuse, then by the first leg. This is the emission order
/// of every enumeration stream.
struct hypotenuse_order {
  bool operator()(const Triple& x, const Triple& y) const noexcept {
    if (x.c() != y.c()) return x.c() < y.c();
    if (x.a() != y.a()) return x.a() < y.a();
    return x.b() < y.b();
  }
};

struct LatticeIndex {
  u64 m;
  u64 n;

  LatticeIndex(u64 m_, u64 n_) : m(m_), n(n_) {
    if (m == 0 || n == 0)
      throw error(errc::invalid_argument, "lattice index requires m >= 1 and n >= 1");
  }

  /// 2m - 1
  u64 odd_parameter() const { return arith::sub(arith::mul(2, m), 1); }

  friend bool operator==(const LatticeIndex&, const LatticeIndex&) = default;
};

/// (mu, n) with mu = 2m - 1 allowed to be any positive integer. Odd mu
/// lands in class C; even mu gives triples with all components even.
struct ExtendedIndex {
  u64 mu;
  u64 n;

  ExtendedIndex(u64 mu_, u64 n_) : mu(mu_), n(n_) {
    if (mu == 0 || n == 0)
      throw error(errc::invalid_argument, "extended index requires mu >= 1 and n >= 1");
  }

  explicit ExtendedIndex(const LatticeIndex& idx) : ExtendedIndex(idx.odd_parameter(), idx.n) {}

  std::optional<LatticeIndex> lattice() const {
    if (arith::is_even(mu)) return std::nullopt;
    return LatticeIndex((mu + 1) / 2, n);
  }

  friend bool operator==(const ExtendedIndex&, const ExtendedIndex&) = default;
};

struct EuclidParams {
  u64 u;
  u64 v;

  EuclidParams(u64 u_, u64 v_) : u(u_), v(v_) {
    if (!(u > v && v >= 1))
      throw error(errc::invalid_argument, "Euclid parameters require u > v >= 1");
  }

  friend bool operator==(const EuclidParams&, const EuclidParams&) = default;
};

/// e = c - a, f = a + b - c, d = c - b, so that
///   [a b c]^T = [[0 1 1], [1 1 0], [1 1 1]] [e f d]^T.
struct Decomposition {
  u64 e;
  u64 f;
  u64 d;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// ---------------------------------------------------------------------------
// Forward maps

inline Triple extended_triple(const ExtendedIndex& idx) {
  using namespace arith;
  const u64 two_n = mul(2, idx.n);
  const u64 a = mul(idx.mu, add(two_n, idx.mu));
  const u64 b = mul(two_n, add(idx.n, idx.mu));
  const u64 c = add(mul(two_n, idx.n), a);
  return Triple(a, b, c);
}

inline Triple triple_from_lattice(const LatticeIndex& idx) {
  return extended_triple(ExtendedIndex(idx));
}

inline Triple euclid_triple(const EuclidParams& p) {
  using namespace arith;
  const u64 uu = mul(p.u, p.u);
  const u64 vv = mul(p.v, p.v);
  return Triple(uu - vv, mul(mul(2, p.u), p.v), add(uu, vv));
}

// ---------------------------------------------------------------------------
// Orientation and membership

/// Puts the odd leg first when the legs have opposite parity.
inline Triple canonicalize(const Triple& t) {
  if (arith::is_even(t.a()) && arith::is_odd(t.b())) return t.swapped_legs();
  return t;
}

/// Recovers (m, n) from a triple in class C. Every condition is verified;
/// the message names the first one that fails.
inline LatticeIndex lattice_from_triple(const Triple& t) {
  using namespace arith;
  auto reject = [&](const std::string& why) {
    return error(errc::not_in_class_c, t.to_string() + ": " + why);
  };
  if (!is_odd(t.a())) throw reject("leg a must be odd");
  if (!is_even(t.b())) throw reject("leg b must be even");
  if (!is_odd(t.c())) throw reject("hypotenuse c must be odd");

  const u64 d = t.c() - t.b();
  const auto root = exact_sqrt(d);
  if (!root) throw reject("c - b = " + std::to_string(d) + " is not a perfect square");

  // a + b > c for any right triangle, so f >= 1. Compute in 128 bits since
  // a + b may exceed 64 bits near the top of the range.
  const u128 f = static_cast<u128>(t.a()) + t.b() - t.c();
  const u128 divisor = static_cast<u128>(2) * *root;
  if (f % divisor != 0)
    throw reject("a + b - c is not divisible by 2*sqrt(c - b) = " +
                 std::to_string(static_cast<u64>(divisor)));

  LatticeIndex idx((*root + 1) / 2, static_cast<u64>(f / divisor));
  if (triple_from_lattice(idx) != t) throw reject("does not reproduce under the forward map");
  return idx;
}

inline bool is_primitive_lattice(const LatticeIndex& idx) {
  return gcd(idx.n, idx.odd_parameter()) == 1;
}

inline bool is_primitive(const Triple& t) { return gcd(t.a(), t.b(), t.c()) == 1; }

/// Inverse of Euclid's formula. Tries the even leg in position b first,
/// then the swapped orientation. Empty when the triple is not Euclidean.
inline std::optional<EuclidParams> euclid_params_from_triple(const Triple& t) {
  using namespace arith;
  for (const auto& [x, y] : {std::pair{t.a(), t.b()}, std::pair{t.b(), t.a()}}) {
    if (!is_even(y)) continue;
    // c and x have equal parity whenever y is even.
    const u128 sum = static_cast<u128>(t.c()) + x;
    if (sum % 2 != 0) continue;
    const auto u = exact_sqrt(static_cast<u64>(sum / 2));
    const auto v = exact_sqrt((t.c() - x) / 2);
    if (!u || !v || *v == 0 || *u <= *v) continue;
    if (static_cast<u128>(2) * *u * *v != y) continue;
    return EuclidParams(*u, *v);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Decomposition

inline Decomposition decompose(const Triple& t) {
  lattice_from_triple(t);  // throws not_in_class_c
  return Decomposition{t.c() - t.a(), t.a() + t.b() - t.c(), t.c() - t.b()};
}

/// Inverse of decompose. Requires e = 2n^2, d = (2m-1)^2, f = 2n(2m-1).
inline Triple compose_def(u64 e, u64 f, u64 d) {
  using namespace arith;
  auto reject = [&](const std::string& why) {
    return error(errc::invalid_decomposition,
                 "(e=" + std::to_string(e) + ", f=" + std::to_string(f) +
                     ", d=" + std::to_string(d) + "): " + why);
  };
  if (e == 0 || is_odd(e)) throw reject("e must be a positive even number");
  const auto n = exact_sqrt(e / 2);
  if (!n) throw reject("e is not twice a perfect square");
  const auto odd_root = exact_sqrt(d);
  if (d == 0 || !odd_root || is_even(*odd_root)) throw reject("d is not an odd perfect square");
  if (static_cast<u128>(2) * *n * *odd_root != f) throw reject("f != 2*sqrt(e/2)*sqrt(d)");
  return Triple(add(f, d), add(e, f), add(add(e, d), f));
}

}  // namespace triple_lattice
