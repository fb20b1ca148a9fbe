#pragma once

// Membership in the chain P ⊃ E ⊃ C ⊃ P0 (all triples, Euclidean triples,
// class C, primitive triples), the brute-force oracle, and the chain check
// that compares the lattice streams against it.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "core.hpp"
#include "enumerate.hpp"

namespace triple_lattice {

struct ClassReport {
  bool in_P = false;
  bool in_E = false;
  bool in_C = false;
  bool in_P0 = false;
  /// The input with the largest value as c and, when the legs differ in
  /// parity, the odd leg first. Absent when the input is not a triple.
  std::optional<Triple> triple;
  std::optional<LatticeIndex> lattice;
  std::optional<EuclidParams> euclid;
  /// k with triple = k * primitive triple; present whenever in_P.
  std::optional<u64> scale;
};

/// Classifies three positive integers given in any order.
inline ClassReport classify(u64 x, u64 y, u64 z) {
  if (x == 0 || y == 0 || z == 0)
    throw error(errc::invalid_argument, "classify requires positive integers");
  std::array<u64, 3> v{x, y, z};
  std::sort(v.begin(), v.end());

  ClassReport report;
  if (v[1] == v[2] || arith::square_wide(v[2]) - arith::square_wide(v[0]) != arith::square_wide(v[1]))
    return report;

  const Triple t = canonicalize(Triple(v[0], v[1], v[2]));
  report.in_P = true;
  report.triple = t;
  report.scale = gcd(t.a(), t.b(), t.c());
  report.in_P0 = *report.scale == 1;
  report.euclid = euclid_params_from_triple(t);
  report.in_E = report.euclid.has_value();
  report.in_C = report.in_E && arith::is_odd(t.a()) && arith::is_even(t.b()) && arith::is_odd(t.c());
  if (report.in_C) report.lattice = lattice_from_triple(t);
  return report;
}

// ---------------------------------------------------------------------------
// Oracle

inline constexpr u64 default_oracle_ceiling = 10'000;

/// Storage orientation used by the oracle: even leg second when the legs
/// differ in parity, otherwise legs ascending.
inline Triple oracle_form(const Triple& t) {
  if (arith::is_odd(t.a()) != arith::is_odd(t.b())) return canonicalize(t);
  return t.a() <= t.b() ? t : t.swapped_legs();
}

/// All Pythagorean triples with c <= c_max by exhaustive search over leg
/// pairs. For a fixed leg a the candidate hypotenuse only moves upward as b
/// grows, so it is tracked with a running pointer and checked exactly.
inline std::set<Triple> brute_force_triples(EnumBound bound, u64 ceiling = default_oracle_ceiling) {
  if (bound.c_max > ceiling)
    throw error(errc::bound_too_large, "oracle bound " + std::to_string(bound.c_max) +
                                           " exceeds ceiling " + std::to_string(ceiling));
  if (bound.c_max > (u64{1} << 31))
    throw error(errc::bound_too_large, "oracle bound must stay below 2^31");
  std::set<Triple> out;
  const u64 c_max = bound.c_max;
  for (u64 a = 1; a < c_max; ++a) {
    u64 c = a + 1;
    for (u64 b = a + 1; b < c_max; ++b) {
      const u64 target = a * a + b * b;
      while (c * c < target) ++c;
      if (c > c_max) break;
      if (c * c == target) out.insert(oracle_form(Triple(a, b, c)));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Chain verification

struct ChainReport {
  u64 c_max = 0;
  std::size_t count_P = 0;
  std::size_t count_E = 0;
  std::size_t count_C = 0;
  std::size_t count_P0 = 0;
  /// Smallest element, in (c, a) order, of each strict difference.
  std::optional<Triple> witness_P_minus_E;
  std::optional<Triple> witness_E_minus_C;
  std::optional<Triple> witness_C_minus_P0;
  std::vector<std::string> discrepancies;

  bool ok() const noexcept { return discrepancies.empty(); }
};

namespace detail {

// Keyed by oracle_form so sets from different routes compare; the value
// keeps the orientation the producing route emitted.
using keyed_set = std::map<Triple, Triple>;

template <class Stream>
keyed_set key_stream(Stream&& s) {
  keyed_set out;
  while (auto t = s.next()) out.emplace(oracle_form(*t), *t);
  return out;
}

inline std::optional<Triple> first_missing(const keyed_set& big, const keyed_set& small) {
  std::optional<Triple> best;
  for (const auto& [key, shown] : big)
    if (!small.contains(key) && (!best || hypotenuse_order{}(shown, *best))) best = shown;
  return best;
}

inline void expect_subset(const keyed_set& sub, const keyed_set& super, const char* sub_name,
                          const char* super_name, std::vector<std::string>& out) {
  for (const auto& [key, shown] : sub)
    if (!super.contains(key))
      out.push_back(shown.to_string() + " in " + sub_name + " but not in " + super_name);
}

inline void expect_equal(const keyed_set& x, const keyed_set& y, const char* x_name,
                         const char* y_name, std::vector<std::string>& out) {
  expect_subset(x, y, x_name, y_name, out);
  expect_subset(y, x, y_name, x_name, out);
}

}  // namespace detail

/// Builds P and P0 from the oracle, E from the extended lattice and C from
/// the lattice, then checks the inclusions and cross-checks E and C against
/// membership tests applied to the oracle set.
inline ChainReport verify_chain(EnumBound bound, u64 ceiling = default_oracle_ceiling) {
  if (!bound.is_valid())
    throw error(errc::invalid_argument,
                "verify requires c_max >= " + std::to_string(EnumBound::smallest_hypotenuse));

  detail::keyed_set P, P0, E_by_test, C_by_test;
  for (const Triple& t : brute_force_triples(bound, ceiling)) {
    P.emplace(t, t);
    if (is_primitive(t)) P0.emplace(t, t);
    if (euclid_params_from_triple(t)) {
      E_by_test.emplace(t, t);
      if (arith::is_odd(t.c()) && arith::is_odd(t.a()) != arith::is_odd(t.b()))
        C_by_test.emplace(t, canonicalize(t));
    }
  }
  const auto E = detail::key_stream(extended_enumerate(bound));
  const auto C = detail::key_stream(lattice_enumerate(bound));

  ChainReport r;
  r.c_max = bound.c_max;
  r.count_P = P.size();
  r.count_E = E.size();
  r.count_C = C.size();
  r.count_P0 = P0.size();

  detail::expect_subset(E, P, "E", "P", r.discrepancies);
  detail::expect_subset(C, E, "C", "E", r.discrepancies);
  detail::expect_subset(P0, C, "P0", "C", r.discrepancies);
  detail::expect_equal(E, E_by_test, "E", "Euclid-invertible oracle triples", r.discrepancies);
  detail::expect_equal(C, C_by_test, "C", "class-C oracle triples", r.discrepancies);

  r.witness_P_minus_E = detail::first_missing(P, E);
  r.witness_E_minus_C = detail::first_missing(E, C);
  r.witness_C_minus_P0 = detail::first_missing(C, P0);
  return r;
}

}  // namespace triple_lattice
