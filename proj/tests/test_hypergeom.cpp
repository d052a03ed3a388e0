#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "harmonid/error.hpp"
#include "harmonid/hypergeom.hpp"
#include "harmonid/special.hpp"
#include "oracle.hpp"

using namespace harmonid;
using oracle::q;

namespace {

// Direct term-by-term summation with oracle Pochhammers.
oracle::Q direct_sum(const std::vector<oracle::Q>& num, const std::vector<oracle::Q>& den, const oracle::Q& z,
                     unsigned N) {
  oracle::Q sum = 0;
  oracle::Q zk = 1;
  oracle::Q fact = 1;
  for (unsigned k = 0; k <= N; ++k) {
    oracle::Q t = zk / fact;
    for (const auto& a : num) t *= oracle::rising(a, k);
    for (const auto& b : den) t /= oracle::rising(b, k);
    sum += t;
    zk *= z;
    fact *= k + 1;
  }
  return sum;
}

PfqSpec spec_of(const std::vector<oracle::Q>& num, const std::vector<oracle::Q>& den, const oracle::Q& z) {
  PfqSpec s;
  for (const auto& a : num) s.numerator.push_back(oracle::R(a));
  for (const auto& b : den) s.denominator.push_back(oracle::R(b));
  s.argument = oracle::R(z);
  return s;
}

double tg(double x) { return std::tgamma(x); }

}  // namespace

TEST_CASE("termination index is the smallest reachable zero") {
  CHECK(termination_index(PfqSpec{{Rational(-3), Rational(1, 2)}, {Rational(2)}, Rational(1)}) == 3u);
  CHECK(termination_index(PfqSpec{{Rational(-5), Rational(-2)}, {Rational(2)}, Rational(1)}) == 2u);
  CHECK(termination_index(PfqSpec{{Rational(0)}, {}, Rational(1)}) == 0u);
  CHECK_FALSE(termination_index(PfqSpec{{Rational(1, 2), Rational(3)}, {Rational(2)}, Rational(1)}).has_value());
}

TEST_CASE("exact sums against direct summation") {
  const std::vector<oracle::Q> num = {-7, q(1, 3), q(-5, 4)};
  const std::vector<oracle::Q> den = {q(7, 2), q(2, 9)};
  for (const auto& z : {q(1), q(-1), q(3, 7)}) {
    const auto expected = oracle::R(direct_sum(num, den, z, 7));
    CHECK(pfq_exact(spec_of(num, den, z)) == expected);
    CHECK(pfq_exact_incremental(spec_of(num, den, z)) == expected);
  }
}

TEST_CASE("Chu-Vandermonde") {
  for (unsigned n = 0; n <= 10; ++n) {
    const oracle::Q b = q(2, 7);
    const oracle::Q c = q(-13, 5);
    const PfqSpec s = spec_of({-static_cast<long>(n), b}, {c}, 1);
    const auto expected = oracle::R(oracle::rising(c - b, n) / oracle::rising(c, n));
    CHECK(pfq_exact(s) == expected);
    CHECK(pfq_exact_incremental(s) == expected);
  }
}

TEST_CASE("summing a terminating series backward gives the same value") {
  const PfqSpec s = spec_of({-9, q(3, 8), q(5, 3)}, {q(-1, 2), q(7, 3)}, q(2, 5));
  Rational backward(0);
  for (unsigned k = 10; k-- > 0;) {
    Rational t(1);
    for (const auto& a : s.numerator) t *= pochhammer(a, k);
    for (const auto& b : s.denominator) t /= pochhammer(b, k);
    t *= s.argument.pow(static_cast<int>(k)) / factorial(k);
    backward += t;
  }
  CHECK(pfq_exact(s) == backward);
}

TEST_CASE("exact mode errors") {
  CHECK_THROWS_AS(pfq_exact(PfqSpec{{Rational(1, 2)}, {Rational(3)}, Rational(1)}), ModeError);
  CHECK_THROWS_AS(pfq_exact_incremental(PfqSpec{{Rational(1, 2)}, {Rational(3)}, Rational(1)}), ModeError);
  // (-2)_k vanishes at k = 3, before the sum terminates at k = 5.
  try {
    (void)pfq_exact(PfqSpec{{Rational(-5), Rational(1)}, {Rational(-2)}, Rational(1)});
    FAIL("expected a pole");
  } catch (const PoleError& e) {
    REQUIRE(e.index().has_value());
    CHECK(*e.index() == 3);
  }
  CHECK_THROWS_AS(pfq_exact_incremental(PfqSpec{{Rational(-5), Rational(1)}, {Rational(-2)}, Rational(1)}), PoleError);
  // Termination before the pole is fine.
  CHECK_NOTHROW((void)pfq_exact(PfqSpec{{Rational(-2), Rational(1)}, {Rational(-4)}, Rational(1)}));
}

TEST_CASE("incremental path uses fewer multiplications") {
  const PfqSpec s = dougall_series(Rational(1, 3), Rational(2, 7), Rational(3, 5), Rational(-40));
  reset_bigint_mul_count();
  const Rational full = pfq_exact(s);
  const auto full_count = bigint_mul_count();
  reset_bigint_mul_count();
  const Rational inc = pfq_exact_incremental(s);
  CHECK(full == inc);
  CHECK(bigint_mul_count() < full_count);
}

TEST_CASE("gamma against the standard library") {
  for (double x : {0.1, 0.5, 1.0, 1.5, 2.25, 3.7, 7.0, 10.5, 20.3, 55.5, -0.5, -1.3, -2.7, -7.25}) {
    CAPTURE(x);
    CHECK(gamma_float(x) == doctest::Approx(std::tgamma(x)).epsilon(1e-12));
  }
  CHECK(gamma_float(5.0) == doctest::Approx(24.0).epsilon(1e-13));
  CHECK_THROWS_AS((void)gamma_float(0.0), PoleError);
  CHECK_THROWS_AS((void)gamma_float(-3.0), PoleError);
  const std::array<GammaFactor, 2> f = {{{1, 2.5}, {-1, -1.0}}};
  CHECK_THROWS_AS((void)gamma_rhs(f), PoleError);
}

TEST_CASE("float series: Gauss and known values") {
  // 2F1(a,b;c;1) = G(c)G(c-a-b)/[G(c-a)G(c-b)]
  const double a = 0.3, b = 0.45, c = 3.1;
  const FloatSum s = pfq_float(RealPfqSpec{{a, b}, {c}, 1.0}, 1e-14, 500000);
  CHECK(s.converged);
  CHECK(s.value == doctest::Approx(tg(c) * tg(c - a - b) / (tg(c - a) * tg(c - b))).epsilon(1e-9));
  // 1F0(1;;1/2) = 2
  const FloatSum g = pfq_float(RealPfqSpec{{1.0}, {}, 0.5}, 1e-15, 1000);
  CHECK(g.converged);
  CHECK(g.value == doctest::Approx(2.0).epsilon(1e-13));
  // divergent: 2F1(1,1;1;1) never satisfies the stopping rule
  const FloatSum d = pfq_float(RealPfqSpec{{1.0, 1.0}, {1.0}, 1.0}, 1e-14, 2000);
  CHECK_FALSE(d.converged);
  CHECK(d.terms == 2000);
}

TEST_CASE("gamma-form closed forms against tgamma formulas") {
  {
    const double a = 2.9, b = 0.4, c = 0.7;
    const double expected = tg(1 + a / 2) * tg(1 + a - b) * tg(1 + a - c) * tg(1 + a / 2 - b - c) /
                            (tg(1 + a) * tg(1 + a / 2 - b) * tg(1 + a / 2 - c) * tg(1 + a - b - c));
    CHECK(dixon_gamma_rhs(a, b, c) == doctest::Approx(expected).epsilon(1e-11));
    const FloatSum s = pfq_float(dixon_series(a, b, c), 1e-14, 500000);
    CHECK(s.converged);
    CHECK(s.value == doctest::Approx(expected).epsilon(1e-7));
  }
  {
    const double a = 2.4, b = 0.3, c = 0.5, d = 0.2;
    const double expected = tg(1 + a - b) * tg(1 + a - c) * tg(1 + a - d) * tg(1 + a - b - c - d) /
                            (tg(1 + a) * tg(1 + a - b - c) * tg(1 + a - b - d) * tg(1 + a - c - d));
    CHECK(dougall_gamma_rhs(a, b, c, d) == doctest::Approx(expected).epsilon(1e-11));
  }
  {
    const double a = 0.35, b = 2.6, c = 1.2;
    const double pi = 3.14159265358979323846;
    const double expected = pi * std::pow(2.0, 1 - 2 * b) * tg(c) * tg(1 + 2 * b - c) /
                            (tg((a + c) / 2) * tg(b + (1 + a - c) / 2) * tg((1 - a + c) / 2) * tg(b + (2 - a - c) / 2));
    CHECK(whipple_gamma_rhs(a, b, c) == doctest::Approx(expected).epsilon(1e-11));
    // the half-sum form is the mean of the two Whipple right-hand sides
    CHECK(whipple_like_gamma_rhs(a, b, c) ==
          doctest::Approx((whipple_gamma_rhs(a, b, c) + whipple_shifted_gamma_rhs(a, b, c)) / 2).epsilon(1e-12));
  }
}

TEST_CASE("terminating reductions against direct sums") {
  for (unsigned n = 0; n <= 8; ++n) {
    CAPTURE(n);
    const long m = -static_cast<long>(n);
    {
      const oracle::Q a = q(7, 3), b = q(-2, 5), c = q(1, 4);
      const std::array<Rational, 3> p = {oracle::R(a), oracle::R(b), oracle::R(c)};
      const auto lhs = direct_sum({a, 1 + a / 2, b, c, m}, {a / 2, 1 + a - b, 1 + a - c, 1 + a - m}, 1, n);
      const oracle::Q rhs = oracle::rising(1 + a, n) * oracle::rising(1 + a - b - c, n) /
                       (oracle::rising(1 + a - b, n) * oracle::rising(1 + a - c, n));
      CHECK(lhs == rhs);
      CHECK(pfq_exact(terminating_series(TerminatingForm::dougall_d, n, p)) == oracle::R(lhs));
      CHECK(terminating_gamma_reduction(TerminatingForm::dougall_d, n, p) == oracle::R(rhs));
    }
    {
      const oracle::Q a = q(5, 6), b = q(3, 7);
      const std::array<Rational, 2> p = {oracle::R(a), oracle::R(b)};
      const auto lhs = direct_sum({a, b, m}, {1 + a - b, 1 + a - m}, 1, n);
      CHECK(terminating_gamma_reduction(TerminatingForm::dixon_c, n, p) == oracle::R(lhs));
      const auto lhs2 = direct_sum({a, b, m}, {1 + a - b, a - m}, 1, n);
      CHECK(terminating_gamma_reduction(TerminatingForm::dixonlike_c, n, p) == oracle::R(lhs2));
    }
    {
      const oracle::Q b = q(1, 3), c = q(-4, 7), d = q(9, 5), e = q(2, 11);
      const std::array<Rational, 4> p = {oracle::R(b), oracle::R(c), oracle::R(d), oracle::R(e)};
      const auto lhs = direct_sum({m, b, c}, {d, e}, 1, n);
      CHECK(terminating_gamma_reduction(TerminatingForm::kummer_a, n, p) == oracle::R(lhs));
    }
  }
  const std::array<Rational, 1> too_few = {Rational(1)};
  CHECK_THROWS_AS((void)terminating_gamma_reduction(TerminatingForm::dixon_c, 2, too_few), UsageError);
}
