#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "specht/field.hpp"

using namespace specht;

TEST_CASE("rationals are canonical") {
  CHECK(Rational(1, 3) == Rational(2, 6));
  CHECK(Rational(-1, 3) == Rational(1, -3));
  CHECK(Rational(0, 7).is_zero());
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic") {
  Rational a(1, 2), b(1, 3);
  CHECK((a + b).str() == "5/6");
  CHECK((a - b).str() == "1/6");
  CHECK((a * b).str() == "1/6");
  CHECK((a / b).str() == "3/2");
  CHECK((-a).str() == "-1/2");
  CHECK(a.inv().str() == "2");
  CHECK_THROWS_AS(Rational().inv(), std::domain_error);
  CHECK_THROWS_AS(a / Rational(), std::domain_error);
}

TEST_CASE("prime field arithmetic") {
  Fp::Context f5(5);
  Fp a = Fp::from_int(3, f5), b = Fp::from_int(4, f5);
  CHECK((a + b) == Fp::from_int(2, f5));
  CHECK((a * b) == Fp::from_int(2, f5));
  CHECK((a - b) == Fp::from_int(4, f5));
  CHECK((-a) == Fp::from_int(2, f5));
  CHECK(Fp::from_int(-1, f5) == Fp::from_int(4, f5));
  CHECK(a.inv() == Fp::from_int(2, f5));
  CHECK((a / b) == Fp::from_int(2, f5));  // 3 * 4^{-1} = 3 * 4 = 12 = 2
  CHECK_THROWS_AS(Fp::from_int(0, f5).inv(), std::domain_error);
}

TEST_CASE("field axioms on samples") {
  Fp::Context f7(7);
  for (int x = 0; x < 7; ++x)
    for (int y = 0; y < 7; ++y) {
      Fp a = Fp::from_int(x, f7), b = Fp::from_int(y, f7);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a + (-a) == Fp());
      if (!b.is_zero()) CHECK(b * b.inv() == Fp::from_int(1, f7));
    }
}

TEST_CASE("anonymous zero combines with any modulus") {
  Fp::Context f5(5);
  Fp zero;
  CHECK((zero + Fp::from_int(2, f5)) == Fp::from_int(2, f5));
  CHECK((Fp::from_int(2, f5) * zero).is_zero());
  CHECK(zero == Fp::from_int(0, f5));
}

TEST_CASE("invalid moduli rejected") {
  CHECK_THROWS_AS(Fp::Context(1), std::invalid_argument);
  CHECK_THROWS_AS(Fp::Context(6), std::invalid_argument);
  Fp::Context f2(2), f3(3);
  CHECK_THROWS_AS(Fp::from_int(1, f2) + Fp::from_int(1, f3), std::invalid_argument);
}
