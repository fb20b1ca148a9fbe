#include <catch2/catch_amalgamated.hpp>

#include <limits>
#include <random>

#include "oracle.hpp"
#include "triple_lattice/arith.hpp"

using namespace triple_lattice;

TEST_CASE("gcd examples", "[arith]") {
  CHECK(gcd(3, 3) == 3);
  CHECK(gcd(2, 1) == 1);
  CHECK(gcd(36, 45) == 9);
  CHECK(gcd(27, 36, 45) == 9);
  CHECK_THROWS_AS(gcd(0, 4), error);
}

TEST_CASE("gcd agrees with a hand-written Euclid loop", "[arith][property]") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<u64> dist(1, std::numeric_limits<u64>::max());
  for (int i = 0; i < 2000; ++i) {
    const u64 x = dist(rng), y = dist(rng) >> (i % 60);
    if (y == 0) continue;
    REQUIRE(gcd(x, y) == oracle::naive_gcd(x, y));
  }
}

TEST_CASE("checked arithmetic reports overflow", "[arith]") {
  constexpr u64 max = std::numeric_limits<u64>::max();
  CHECK(arith::add(max - 1, 1) == max);
  CHECK_THROWS_MATCHES(arith::add(max, 1), error, Catch::Matchers::Predicate<error>([](const error& e) {
                         return e.code() == errc::overflow;
                       }));
  CHECK_THROWS_AS(arith::mul(u64{1} << 32, u64{1} << 32), error);
  CHECK_THROWS_AS(arith::sub(1, 2), error);
  CHECK(arith::mul(u64{1} << 31, u64{1} << 32) == u64{1} << 63);
}

TEST_CASE("isqrt matches the linear scan for small values", "[arith]") {
  for (u64 x = 0; x < 5000; ++x) {
    u64 root = 0;
    const bool sq = oracle::naive_is_square(x, &root);
    REQUIRE(arith::isqrt(x) == root);
    REQUIRE(arith::is_square(x) == sq);
  }
}

TEST_CASE("isqrt is exact near the top of the range", "[arith]") {
  constexpr u64 max = std::numeric_limits<u64>::max();
  const u64 r = (u64{1} << 32) - 1;
  CHECK(arith::isqrt(max) == r);
  CHECK(arith::exact_sqrt(r * r) == r);
  CHECK_FALSE(arith::exact_sqrt(r * r - 1).has_value());
  CHECK(arith::isqrt(r * r - 1) == r - 1);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 10000; ++i) {
    const u64 x = rng();
    const u64 s = arith::isqrt(x);
    REQUIRE(arith::square_wide(s) <= x);
    REQUIRE(arith::square_wide(s + 1) > x);
  }
}
