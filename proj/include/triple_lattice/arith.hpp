#pragma once

// Checked unsigned 64-bit arithmetic and exact integer square roots.
// Nothing in here touches floating point.

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

#include "error.hpp"

namespace triple_lattice {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

namespace arith {

inline u64 add(u64 x, u64 y) {
  u64 r;
  if (__builtin_add_overflow(x, y, &r))
    throw error(errc::overflow, std::to_string(x) + " + " + std::to_string(y));
  return r;
}

inline u64 sub(u64 x, u64 y) {
  u64 r;
  if (__builtin_sub_overflow(x, y, &r))
    throw error(errc::overflow, std::to_string(x) + " - " + std::to_string(y));
  return r;
}

inline u64 mul(u64 x, u64 y) {
  u64 r;
  if (__builtin_mul_overflow(x, y, &r))
    throw error(errc::overflow, std::to_string(x) + " * " + std::to_string(y));
  return r;
}

inline u128 square_wide(u64 x) noexcept { return static_cast<u128>(x) * x; }

/// floor(sqrt(x)) by bisection on [0, 2^32).
inline u64 isqrt(u64 x) noexcept {
  u64 lo = 0;
  u64 hi = u64{1} << 32;  // hi*hi > x always
  while (hi - lo > 1) {
    const u64 mid = lo + (hi - lo) / 2;
    if (square_wide(mid) <= x)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

/// r with r*r == x, if one exists.
inline std::optional<u64> exact_sqrt(u64 x) noexcept {
  const u64 r = isqrt(x);
  if (square_wide(r) != x) return std::nullopt;
  return r;
}

inline bool is_square(u64 x) noexcept { return exact_sqrt(x).has_value(); }

inline bool is_odd(u64 x) noexcept { return (x & 1u) != 0; }
inline bool is_even(u64 x) noexcept { return !is_odd(x); }

}  // namespace arith

/// Greatest common divisor of two positive integers.
inline u64 gcd(u64 x, u64 y) {
  if (x == 0 || y == 0)
    throw error(errc::invalid_argument, "gcd requires positive arguments");
  return std::gcd(x, y);
}

inline u64 gcd(u64 x, u64 y, u64 z) { return gcd(gcd(x, y), z); }

}  // namespace triple_lattice
