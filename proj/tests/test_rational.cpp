#include <doctest.h>

#include <sstream>

#include "harmonid/error.hpp"
#include "harmonid/rational.hpp"

using harmonid::Rational;

TEST_CASE("canonical form") {
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational(0, 7).to_string() == "0/1");
  CHECK(Rational(5).to_string() == "5/1");
  CHECK(Rational(6, -4).denominator() == 2);
  CHECK_THROWS_AS(Rational(1, 0), harmonid::ArithmeticError);
}

TEST_CASE("parse") {
  CHECK(Rational::parse("10/-4") == Rational(-5, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse(" 3/9 ") == Rational(1, 3));
  CHECK_THROWS_AS(Rational::parse("1/0"), harmonid::ArithmeticError);
  CHECK_THROWS_AS(Rational::parse("abc"), harmonid::UsageError);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), harmonid::UsageError);
  CHECK_THROWS_AS(Rational::parse(""), harmonid::UsageError);
}

TEST_CASE("field operations") {
  const Rational a(1, 3);
  const Rational b(-5, 6);
  CHECK(a + b == Rational(-1, 2));
  CHECK(a - b == Rational(7, 6));
  CHECK(a * b == Rational(-5, 18));
  CHECK(a / b == Rational(-2, 5));
  CHECK(-a == Rational(-1, 3));
  CHECK(b.reciprocal() == Rational(-6, 5));
  CHECK_THROWS_AS(a / Rational(0), harmonid::ArithmeticError);
  CHECK_THROWS_AS(Rational(0).reciprocal(), harmonid::ArithmeticError);
}

TEST_CASE("powers") {
  CHECK(Rational(2).pow(10) == Rational(1024));
  CHECK(Rational(2).pow(-3) == Rational(1, 8));
  CHECK(Rational(-2, 3).pow(0) == Rational(1));
  CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
  CHECK_THROWS_AS(Rational(0).pow(-1), harmonid::ArithmeticError);
}

TEST_CASE("ordering and predicates") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(4, 2).is_integer());
  CHECK_FALSE(Rational(3, 2).is_integer());
  CHECK(Rational(-3).sign() == -1);
  CHECK(Rational(0).is_zero());
  CHECK(harmonid::abs(Rational(-2, 7)) == Rational(2, 7));
  CHECK(Rational(7, 2).to_double() == doctest::Approx(3.5));
  std::ostringstream os;
  os << Rational(-2, 4);
  CHECK(os.str() == "-1/2");
}

TEST_CASE("large values stay exact") {
  Rational f(1);
  for (int i = 1; i <= 40; ++i) {
    f *= Rational(i);
  }
  CHECK(f.to_string() == "815915283247897734345611269596115894272000000000/1");
  CHECK(f / f == Rational(1));
}

TEST_CASE("multiplication counter") {
  harmonid::reset_bigint_mul_count();
  const Rational a(2, 3);
  const Rational b(5, 7);
  (void)(a * b);
  CHECK(harmonid::bigint_mul_count() == 2);
  (void)(a / b);
  CHECK(harmonid::bigint_mul_count() == 4);
  (void)(a + b);
  CHECK(harmonid::bigint_mul_count() == 7);
  harmonid::reset_bigint_mul_count();
  CHECK(harmonid::bigint_mul_count() == 0);
}
