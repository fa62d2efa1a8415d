#include <doctest.h>

#include <set>

#include "qcseq/number_theory.hpp"

using namespace qcseq;

TEST_CASE("mod_pow on known values") {
  CHECK(mod_pow(5, 2, 18) == 7);
  CHECK(mod_pow(7, 0, 9) == 1);
  CHECK(mod_pow(3, 6, 7) == 1);
  CHECK(mod_pow(-1, 3, 7) == 6);
  CHECK_THROWS_AS(mod_pow(3, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(mod_pow(3, -1, 7), std::invalid_argument);
}

TEST_CASE("mod_pow agrees with repeated multiplication") {
  for (std::int64_t modulus = 2; modulus <= 30; ++modulus) {
    for (std::int64_t base = 0; base < modulus; ++base) {
      std::int64_t acc = 1 % modulus;
      for (std::int64_t exp = 0; exp <= 12; ++exp) {
        CHECK(mod_pow(base, exp, modulus) == acc);
        acc = acc * base % modulus;
      }
    }
  }
}

TEST_CASE("multiplicative_order on known values") {
  CHECK(multiplicative_order(5, 9) == 6);
  CHECK(multiplicative_order(1, 9) == 1);
  CHECK(multiplicative_order(8, 9) == 2);
  CHECK_THROWS_AS(multiplicative_order(6, 9), std::invalid_argument);
}

TEST_CASE("find_odd_primitive_root on known values") {
  CHECK(find_odd_primitive_root(3, 2) == 5);
  CHECK(find_odd_primitive_root(5, 1) == 3);
  CHECK(find_odd_primitive_root(7, 1) == 3);
  CHECK_THROWS_AS(find_odd_primitive_root(9, 1), std::invalid_argument);
  CHECK_THROWS_AS(find_odd_primitive_root(2, 1), std::invalid_argument);
}

TEST_CASE("the found root generates the units of p^m and 2p^m") {
  const std::int64_t grid[][2] = {{3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2},
                                  {7, 1}, {7, 2}, {11, 1}, {13, 1}, {17, 1},
                                  {19, 1}, {23, 1}, {29, 1}, {31, 1}};
  for (const auto& [p, m] : grid) {
    const PrimePowerParams params = PrimePowerParams::make(p, m);
    CAPTURE(p);
    CAPTURE(m);
    CHECK(params.g % 2 == 1);
    CHECK(params.g > 1);
    CHECK(params.g < params.n);
    CHECK(multiplicative_order(params.g % params.q, params.q) == params.phi);
    CHECK(multiplicative_order(params.g % params.n, params.n) == params.phi);
  }
}

TEST_CASE("qr_class on known values") {
  CHECK(qr_class(2, 7) == 0);
  CHECK(qr_class(2, 5) == 1);
  CHECK(qr_class(4, 5) == 0);
  CHECK(qr_class(-1, 5) == 0);   // -1 = 4 is a square mod 5
  CHECK(qr_class(-1, 7) == 1);   // p = 3 (mod 4)
  CHECK_THROWS_AS(qr_class(10, 5), std::invalid_argument);
}

TEST_CASE("qr_class agrees with square enumeration") {
  for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    std::set<std::int64_t> squares;
    for (std::int64_t x = 1; x < p; ++x) squares.insert(x * x % p);
    for (std::int64_t n = 1; n < p; ++n) {
      CAPTURE(p);
      CAPTURE(n);
      CHECK(qr_class(n, p) == (squares.count(n) ? 0 : 1));
    }
  }
}

TEST_CASE("params derive q, n and phi consistently") {
  const PrimePowerParams params = PrimePowerParams::make(7, 2);
  CHECK(params.q == 49);
  CHECK(params.n == 98);
  CHECK(params.phi == 42);
  CHECK(params.pm1() == 7);
  CHECK(params.g == 3);
}

TEST_CASE("params reject bad input") {
  CHECK_THROWS_AS(PrimePowerParams::make(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(PrimePowerParams::make(9, 1), std::invalid_argument);
  CHECK_THROWS_AS(PrimePowerParams::make(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(PrimePowerParams::make(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(PrimePowerParams::make(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(PrimePowerParams::make(3, -2), std::invalid_argument);
  CHECK_THROWS_AS(PrimePowerParams::make(3, 14), resource_limit_error);
}
