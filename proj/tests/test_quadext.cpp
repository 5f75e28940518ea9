#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "duple/quadext.hpp"

using duple::QuadExt;
using duple::Rational;
using duple::quad_compare;
using duple::quad_compare_normalized;

TEST_CASE("representative comparisons") {
  // sqrt(2) vs 3/2: 2 < 9/4
  REQUIRE(quad_compare(QuadExt::sqrt_of(2), QuadExt::rational(Rational(3, 2), 2)) < 0);
  // equal values
  QuadExt u(Rational(2), Rational(2), 2);
  REQUIRE(quad_compare(u, u) == 0);
  // sqrt(5) - 1 vs 1: sign analysis on a = -2, b = 1
  QuadExt v(Rational(-1), Rational(1), 5);
  REQUIRE(quad_compare(v, QuadExt::rational(Rational(1), 5)) > 0);
}

TEST_CASE("mismatched radicands are an error") {
  REQUIRE_THROWS_AS(quad_compare(QuadExt::sqrt_of(2), QuadExt::sqrt_of(3)), std::invalid_argument);
}

TEST_CASE("sign case analysis") {
  REQUIRE(QuadExt(Rational(0), Rational(0), 7).sign() == 0);
  REQUIRE(QuadExt(Rational(1), Rational(1), 7).sign() == 1);
  REQUIRE(QuadExt(Rational(-1), Rational(-1), 7).sign() == -1);
  REQUIRE(QuadExt(Rational(-5, 2), Rational(1), 7).sign() == 1);   // sqrt(7) > 5/2
  REQUIRE(QuadExt(Rational(-8, 3), Rational(1), 7).sign() == -1);  // sqrt(7) < 8/3
}

TEST_CASE("square radicands fold to rationals") {
  QuadExt q(Rational(-16, 3), Rational(1), 16);
  REQUIRE(q.is_rational());
  REQUIRE(q.a() == Rational(-4, 3));
  REQUIRE(q.radicand() == 16);
  REQUIRE(q.sign() == -1);
  // sqrt(16)^2 = 16 exactly
  QuadExt r = QuadExt::sqrt_of(16);
  REQUIRE((r * r).a() == Rational(16));
}

TEST_CASE("conjugate product identity on random rationals") {
  std::mt19937_64 gen(11);
  auto rnd = [&]() {
    auto n = static_cast<std::int64_t>(gen() % 201) - 100;
    auto d = static_cast<std::int64_t>(gen() % 99) + 1;
    return Rational(n, d);
  };
  for (int i = 0; i < 500; ++i) {
    Rational a = rnd(), b = rnd();
    for (std::int64_t rad : {2, 3, 5, 7}) {
      QuadExt u(a, b, rad);
      QuadExt prod = u * u.conjugate();
      REQUIRE(prod.is_rational());
      REQUIRE(prod.a() == a * a - b * b * Rational(rad));
    }
  }
}

TEST_CASE("comparison agrees with floating point when the gap is wide") {
  std::mt19937_64 gen(13);
  auto rnd = [&]() {
    auto n = static_cast<std::int64_t>(gen() % 41) - 20;
    auto d = static_cast<std::int64_t>(gen() % 19) + 1;
    return Rational(n, d);
  };
  int checked = 0;
  for (int i = 0; i < 2000; ++i) {
    QuadExt u(rnd(), rnd(), 2), v(rnd(), rnd(), 2);
    double fu = u.to_double(), fv = v.to_double();
    if (std::abs(fu - fv) <= 1e-6) continue;
    ++checked;
    REQUIRE(quad_compare(u, v) == (fu < fv ? -1 : 1));
  }
  REQUIRE(checked > 1000);
}

TEST_CASE("arithmetic and division") {
  QuadExt root2 = QuadExt::sqrt_of(2);
  QuadExt one = QuadExt::rational(Rational(1), 2);
  // 2 / (sqrt(2) - 1) = 2 + 2 sqrt(2)
  QuadExt bound = QuadExt::rational(Rational(2), 2) / (root2 - one);
  REQUIRE(bound.a() == Rational(2));
  REQUIRE(bound.b() == Rational(2));
  // division by zero
  REQUIRE_THROWS_AS(one / QuadExt::rational(Rational(0), 2), std::domain_error);
}

TEST_CASE("division round-trips") {
  std::mt19937_64 gen(17);
  auto rnd = [&]() {
    auto n = static_cast<std::int64_t>(gen() % 41) - 20;
    auto d = static_cast<std::int64_t>(gen() % 9) + 1;
    return Rational(n, d);
  };
  int done = 0;
  for (int i = 0; i < 300; ++i) {
    QuadExt u(rnd(), rnd(), 3), v(rnd(), rnd(), 3);
    if (v.is_zero()) continue;
    QuadExt back = (u / v) * v;
    REQUIRE(back == u);
    ++done;
  }
  REQUIRE(done > 250);
}

TEST_CASE("normalized radicand bookkeeping") {
  // 3*(1 + 2 sqrt(2)) compared against 3 + 6*sqrt(2) written over sqrt(8)
  QuadExt lhs(Rational(3), Rational(6), 2);
  QuadExt rhs(Rational(3), Rational(3), 8);  // 3 + 3*sqrt(8) = 3 + 6*sqrt(2)
  REQUIRE(quad_compare_normalized(lhs, rhs) == 0);
  REQUIRE(quad_compare_normalized(lhs, QuadExt(Rational(3), Rational(4), 8)) < 0);
  REQUIRE(lhs.str() == "3 + 6*sqrt(2)");
  REQUIRE(QuadExt(Rational(0), Rational(1), 2).str() == "1*sqrt(2)");
  REQUIRE(QuadExt(Rational(-2, 3), Rational(1), 2).str() == "-2/3 + 1*sqrt(2)");
}
