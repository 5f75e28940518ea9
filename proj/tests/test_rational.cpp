#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "duple/rational.hpp"

using duple::Rational;

TEST_CASE("construction normalizes") {
  REQUIRE(Rational(2, 4) == Rational(1, 2));
  REQUIRE(Rational(-2, 4) == Rational(-1, 2));
  REQUIRE(Rational(2, -4) == Rational(-1, 2));
  REQUIRE(Rational(0, 7) == Rational(0));
  REQUIRE(Rational(6, 3).is_integer());
  REQUIRE(Rational(6, 3).num() == 2);
  REQUIRE_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic") {
  REQUIRE(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  REQUIRE(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  REQUIRE(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  REQUIRE(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
  REQUIRE(-Rational(5, 7) == Rational(-5, 7));
  REQUIRE_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("ordering") {
  REQUIRE(Rational(1, 3) < Rational(1, 2));
  REQUIRE(Rational(-1, 2) < Rational(-1, 3));
  REQUIRE(Rational(3, 2) > Rational(1));
  REQUIRE(Rational(2, 4) <= Rational(1, 2));
  REQUIRE(Rational(7, 5).sign() == 1);
  REQUIRE(Rational(-7, 5).sign() == -1);
  REQUIRE(Rational(0).sign() == 0);
}

TEST_CASE("strings round-trip") {
  REQUIRE(Rational(-2, 3).str() == "-2/3");
  REQUIRE(Rational(5).str() == "5");
  REQUIRE(Rational::parse("-2/3") == Rational(-2, 3));
  REQUIRE(Rational::parse("42") == Rational(42));
  REQUIRE_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  REQUIRE_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);

  std::mt19937_64 gen(7);
  for (int i = 0; i < 200; ++i) {
    auto n = static_cast<std::int64_t>(gen() % 2001) - 1000;
    auto d = static_cast<std::int64_t>(gen() % 999) + 1;
    Rational r(n, d);
    REQUIRE(Rational::parse(r.str()) == r);
  }
}

TEST_CASE("overflow is detected, not wrapped") {
  Rational big(INT64_MAX / 2, 1);
  REQUIRE_THROWS_AS(big * big, std::overflow_error);
  REQUIRE_NOTHROW(big + big);  // 2*(INT64_MAX/2) still fits
  REQUIRE_THROWS_AS(Rational(INT64_MAX) + Rational(INT64_MAX), std::overflow_error);
}
