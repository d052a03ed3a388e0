#include <doctest.h>

#include "harmonid/error.hpp"
#include "harmonid/jet.hpp"
#include "oracle.hpp"

using harmonid::Jet;
using harmonid::Rational;

TEST_CASE("seeds") {
  const Jet x = Jet::variable(Rational(3, 4));
  CHECK(x.value() == Rational(3, 4));
  CHECK(x.first() == Rational(1));
  CHECK(x.second() == Rational(0));
  const Jet c = Jet::constant(Rational(5));
  CHECK(c.first() == Rational(0));
}

TEST_CASE("polynomial derivatives") {
  // f(x) = x^3 - 2x at x = 2/3: f' = 3x^2 - 2, f'' = 6x
  const Rational x0(2, 3);
  const Jet x = Jet::variable(x0);
  const Jet f = x * x * x - Rational(2) * x;
  CHECK(f.value() == x0 * x0 * x0 - Rational(2) * x0);
  CHECK(f.first() == Rational(3) * x0 * x0 - Rational(2));
  CHECK(f.second() == Rational(6) * x0);
}

TEST_CASE("quotient rule against closed forms") {
  // f(x) = 1/(x+k): f' = -1/(x+k)^2, f'' = 2/(x+k)^3
  for (long k = 1; k <= 5; ++k) {
    const Rational x0(-7, 3);
    const Jet f = Rational(1) / (Jet::variable(x0) + Rational(k));
    const Rational b = x0 + Rational(k);
    CHECK(f.first() == -(b * b).reciprocal());
    CHECK(f.second() == Rational(2) / (b * b * b));
  }
  // g(x) = (x^2+1)/(x-1) at x = 3
  const Jet x = Jet::variable(Rational(3));
  const Jet g = (x * x + Rational(1)) / (x - Rational(1));
  CHECK(g.value() == Rational(5));
  CHECK(g.first() == Rational(1, 2));     // (x^2-2x-1)/(x-1)^2
  CHECK(g.second() == Rational(1, 2));    // 4/(x-1)^3
}

TEST_CASE("division by a jet with zero value") {
  const Jet x = Jet::variable(Rational(1));
  CHECK_THROWS_AS(Jet::constant(Rational(1)) / (x - Rational(1)), harmonid::PoleError);
  CHECK_THROWS_AS(x / Rational(0), harmonid::ArithmeticError);
}

TEST_CASE("chain of products matches log-derivative") {
  // P(x) = prod_{j=1}^{6} (x+j): P'/P = H_6(x)
  const Rational x0(5, 7);
  Jet p = Jet::constant(Rational(1));
  for (long j = 1; j <= 6; ++j) {
    p = p * (Jet::variable(x0) + Rational(j));
  }
  CHECK(p.first() / p.value() == oracle::R(oracle::H(6, x0.raw())));
}
