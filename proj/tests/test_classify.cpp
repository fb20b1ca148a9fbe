#include <catch2/catch_amalgamated.hpp>

#include "oracle.hpp"
#include "triple_lattice/classify.hpp"

using namespace triple_lattice;

TEST_CASE("classify examples", "[classify]") {
  SECTION("(9,12,15) is a triple but not Euclidean") {
    const auto r = classify(9, 12, 15);
    CHECK(r.in_P);
    CHECK_FALSE(r.in_E);
    CHECK_FALSE(r.in_C);
    CHECK_FALSE(r.in_P0);
    CHECK(r.scale == 3u);
    CHECK_FALSE(r.lattice);
  }
  SECTION("(27,36,45) is in C but not primitive") {
    const auto r = classify(27, 36, 45);
    CHECK((r.in_P && r.in_E && r.in_C && !r.in_P0));
    CHECK(r.lattice == LatticeIndex(2, 3));
    CHECK(r.euclid == EuclidParams(6, 3));
    CHECK(r.scale == 9u);
  }
  SECTION("(8,6,10) is Euclidean but not in C") {
    const auto r = classify(8, 6, 10);
    CHECK((r.in_P && r.in_E && !r.in_C && !r.in_P0));
    CHECK(r.euclid == EuclidParams(3, 1));
  }
  SECTION("(3,4,5) is in every set") {
    const auto r = classify(3, 4, 5);
    CHECK((r.in_P && r.in_E && r.in_C && r.in_P0));
    CHECK(r.lattice == LatticeIndex(1, 1));
    CHECK(r.scale == 1u);
  }
  SECTION("non-triples report nothing") {
    const auto r = classify(1, 1, 1);
    CHECK_FALSE((r.in_P || r.in_E || r.in_C || r.in_P0));
    CHECK_FALSE(r.triple);
    CHECK_FALSE(r.scale);
  }
  SECTION("input order does not matter") {
    const auto r = classify(53, 28, 45);
    CHECK(r.in_C);
    CHECK(r.triple == Triple(45, 28, 53));
    CHECK(r.lattice == LatticeIndex(3, 2));
  }
  CHECK_THROWS_AS(classify(0, 3, 4), error);
}

TEST_CASE("classify flags form a chain on every small candidate", "[classify][property]") {
  for (u64 x = 1; x <= 120; ++x)
    for (u64 y = x; y <= 120; ++y)
      for (u64 z = y; z <= 170; ++z) {
        const auto r = classify(x, y, z);
        REQUIRE((!r.in_P0 || r.in_C));
        REQUIRE((!r.in_C || r.in_E));
        REQUIRE((!r.in_E || r.in_P));
        REQUIRE(r.lattice.has_value() == r.in_C);
        REQUIRE(r.euclid.has_value() == r.in_E);
      }
}

TEST_CASE("classify agrees with direct definitions on the oracle", "[classify][property]") {
  for (const Triple& t : brute_force_triples(EnumBound(2000))) {
    const auto r = classify(t.a(), t.b(), t.c());
    REQUIRE(r.in_P);
    const u64 g = oracle::naive_gcd(oracle::naive_gcd(t.a(), t.b()), t.c());
    REQUIRE(r.in_P0 == (g == 1));
    REQUIRE(r.in_E == oracle::euclid_member_by_search(t.a(), t.b(), t.c()));
    const bool one_odd_leg = (t.a() % 2) != (t.b() % 2);
    REQUIRE(r.in_C == (t.c() % 2 == 1 && one_odd_leg && r.in_E));
    if (r.in_P0) REQUIRE((one_odd_leg && t.c() % 2 == 1));
    if (r.lattice) REQUIRE(triple_from_lattice(*r.lattice) == canonicalize(t));
    REQUIRE(r.scale == g);
    if (!r.in_P0) {
      const auto reduced = classify(t.a() / g, t.b() / g, t.c() / g);
      REQUIRE(reduced.in_P0);
    }
  }
}

TEST_CASE("brute_force_triples examples", "[classify]") {
  CHECK(brute_force_triples(EnumBound(5)) == std::set<Triple>{Triple(3, 4, 5)});
  CHECK(brute_force_triples(EnumBound(15)) ==
        std::set<Triple>{Triple(3, 4, 5), Triple(6, 8, 10), Triple(5, 12, 13), Triple(9, 12, 15)});
  const auto at17 = brute_force_triples(EnumBound(17));
  CHECK(at17.contains(Triple(15, 8, 17)));
  CHECK(at17.size() == 5);
  CHECK_THROWS_MATCHES(brute_force_triples(EnumBound(10001)), error,
                       Catch::Matchers::Predicate<error>([](const error& e) { return e.code() == errc::bound_too_large; }));
  CHECK_NOTHROW(brute_force_triples(EnumBound(20), 20));
  CHECK_THROWS_AS(brute_force_triples(EnumBound(21), 20), error);
}

TEST_CASE("brute_force_triples matches the triple-loop oracle", "[classify][property]") {
  const auto fast = brute_force_triples(EnumBound(600));
  std::set<std::tuple<u64, u64, u64>> sorted_legs;
  for (const Triple& t : fast) sorted_legs.emplace(std::min(t.a(), t.b()), std::max(t.a(), t.b()), t.c());
  CHECK(sorted_legs == oracle::pythagorean_sorted_legs(600));
  for (const Triple& t : fast) {
    if (t.a() % 2 != t.b() % 2)
      CHECK(t.b() % 2 == 0);
    else
      CHECK(t.a() < t.b());
  }
}

TEST_CASE("verify_chain examples", "[classify]") {
  SECTION("c_max = 50 shows all three strict inclusions") {
    const auto r = verify_chain(EnumBound(50));
    CHECK(r.ok());
    CHECK(r.witness_P_minus_E == Triple(9, 12, 15));
    CHECK(r.witness_E_minus_C == Triple(8, 6, 10));
    CHECK(r.witness_C_minus_P0 == Triple(27, 36, 45));
  }
  SECTION("c_max = 5 has a single triple everywhere") {
    const auto r = verify_chain(EnumBound(5));
    CHECK(r.ok());
    CHECK((r.count_P == 1 && r.count_E == 1 && r.count_C == 1 && r.count_P0 == 1));
    CHECK_FALSE((r.witness_P_minus_E || r.witness_E_minus_C || r.witness_C_minus_P0));
  }
  SECTION("c_max = 2000 has no discrepancies") {
    const auto r = verify_chain(EnumBound(2000));
    CHECK(r.discrepancies.empty());
    CHECK(r.count_P == 1981);
    CHECK(r.count_P0 == 319);
    CHECK(r.count_E == 749);
    CHECK(r.count_C == 382);
  }
  CHECK_THROWS_AS(verify_chain(EnumBound(4)), error);
}
