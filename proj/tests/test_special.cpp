#include <doctest.h>

#include "harmonid/error.hpp"
#include "harmonid/sampling.hpp"
#include "harmonid/special.hpp"
#include "oracle.hpp"

using namespace harmonid;
using oracle::q;

TEST_CASE("pochhammer") {
  CHECK(pochhammer(Rational(5), 0) == Rational(1));
  CHECK(pochhammer(Rational(0), 0) == Rational(1));
  CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
  CHECK(pochhammer(Rational(-3), 4) == Rational(0));
  CHECK(pochhammer(Rational(-3), 3) == Rational(-6));
  for (unsigned n = 0; n <= 12; ++n) {
    CHECK(pochhammer(Rational(-7, 5), n) == oracle::R(oracle::rising(q(-7, 5), n)));
  }
}

TEST_CASE("factorial and generalized binomial") {
  CHECK(factorial(0) == Rational(1));
  CHECK(factorial(10) == Rational(3628800));
  CHECK(binomial_gen(Rational(10), 3) == Rational(120));
  CHECK(binomial_gen(Rational(3), 5) == Rational(0));
  CHECK(binomial_gen(Rational(-1), 4) == Rational(1));
  CHECK(binomial_gen(Rational(-1), 5) == Rational(-1));
  CHECK(binomial_gen(Rational(1, 2), 2) == Rational(-1, 8));
  for (unsigned t = 0; t <= 10; ++t) {
    CHECK(binomial_gen(Rational(7, 3), t) == oracle::R(oracle::binom(q(7, 3), t)));
    CHECK(binomial_gen(Rational(-11, 4), t) == oracle::R(oracle::binom(q(-11, 4), t)));
  }
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic1(0, Rational(3)) == Rational(0));
  CHECK(harmonic1(3, Rational(0)) == Rational(11, 6));
  CHECK(harmonic2(2, Rational(0)) == Rational(5, 4));
  CHECK(harmonic(2, HarmonicOrder(3), Rational(0)) == Rational(9, 8));
  CHECK(harmonic1(2, Rational(1, 2)) == Rational(2, 3) + Rational(2, 5));
  for (unsigned n = 0; n <= 10; ++n) {
    for (unsigned ell = 1; ell <= 3; ++ell) {
      CHECK(harmonic(n, HarmonicOrder(ell), Rational(-5, 3)) == oracle::R(oracle::H(n, q(-5, 3), ell)));
    }
  }
  CHECK_THROWS_AS(HarmonicOrder(0), UsageError);
}

TEST_CASE("harmonic pole carries the offending index") {
  try {
    (void)harmonic1(5, Rational(-3));
    FAIL("expected a pole");
  } catch (const PoleError& e) {
    REQUIRE(e.index().has_value());
    CHECK(*e.index() == 3);
    CHECK(e.value() == "-3/1");
  }
  CHECK_NOTHROW((void)harmonic1(2, Rational(-3)));
}

TEST_CASE("tables agree with direct evaluation") {
  const Rational x(2, 9);
  const auto h = harmonic_table(x, 8, HarmonicOrder(2));
  REQUIRE(h.size() == 9);
  for (unsigned k = 0; k <= 8; ++k) {
    CHECK(h[k] == harmonic2(k, x));
  }
  const auto sb = shifted_binomial_table(Rational(-5, 2), 7);
  const auto bt = binomial_table(Rational(9, 4), 7);
  for (unsigned k = 0; k <= 7; ++k) {
    CHECK(sb[k] == oracle::R(oracle::binom(q(-5, 2) + k, k)));
    CHECK(bt[k] == oracle::R(oracle::binom(q(9, 4), k)));
  }
}

TEST_CASE("jet harmonic number derivative") {
  const Rational x0(3, 11);
  const Jet h = harmonic(4, HarmonicOrder(1), Jet::variable(x0));
  CHECK(h.value() == harmonic1(4, x0));
  CHECK(h.first() == -harmonic2(4, x0));
  CHECK(h.second() == Rational(2) * harmonic(4, HarmonicOrder(3), x0));
}

TEST_CASE("derivative rule sweeps") {
  Rng rng(derive_seed(7, "special-test", 0));
  const RationalBounds bounds;
  for (unsigned s = 0; s <= 10; ++s) {
    for (unsigned t = 0; t <= s; ++t) {
      for (int i = 0; i < 5; ++i) {
        const Rational x = sample_rational(rng, bounds, [](const Rational& v) { return !v.is_integer(); });
        CHECK(jet_deriv_binom_check(x, s, t));
      }
    }
  }
  for (unsigned n = 0; n <= 15; ++n) {
    for (unsigned ell = 1; ell <= 3; ++ell) {
      const Rational x = sample_rational(rng, bounds, [](const Rational& v) { return !v.is_integer(); });
      CHECK(jet_deriv_harmonic_check(n, ell, x));
    }
  }
  CHECK_THROWS_AS((void)jet_deriv_binom_check(Rational(1, 2), 2, 3), UsageError);
}

TEST_CASE("bisection relation") {
  for (unsigned k = 0; k <= 12; ++k) {
    CHECK(bisection_relation_check(k, Rational(7, 5)));
    CHECK(bisection_relation_check(k, Rational(-1, 3)));
  }
  // Direct oracle for one case.
  const auto x = q(7, 5);
  CHECK(oracle::H(3, x / 2) + oracle::H(3, (x - 1) / 2) == 2 * oracle::H(6, x));
}
