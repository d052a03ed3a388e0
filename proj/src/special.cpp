#include "harmonid/special.hpp"

namespace harmonid {

HarmonicOrder::HarmonicOrder(unsigned ell) : ell_(ell) {
  if (ell == 0) {
    throw UsageError("harmonic order must be at least 1");
  }
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(mpq_class(f));
}

std::vector<Rational> harmonic_table(const Rational& x, unsigned count, HarmonicOrder ell) {
  std::vector<Rational> table;
  table.reserve(count + 1);
  table.emplace_back(0);
  for (unsigned k = 1; k <= count; ++k) {
    const Rational base = x + Rational(k);
    if (base.is_zero()) {
      throw PoleError("harmonic number pole at k=" + std::to_string(k), x.to_string(), k);
    }
    table.push_back(table.back() + base.pow(-static_cast<int>(ell.value())));
  }
  return table;
}

std::vector<Rational> shifted_binomial_table(const Rational& u, unsigned count) {
  std::vector<Rational> table;
  table.reserve(count + 1);
  table.emplace_back(1);
  for (unsigned k = 1; k <= count; ++k) {
    table.push_back(table.back() * (u + Rational(k)) / Rational(k));
  }
  return table;
}

std::vector<Rational> binomial_table(const Rational& v, unsigned count) {
  std::vector<Rational> table;
  table.reserve(count + 1);
  table.emplace_back(1);
  for (unsigned k = 1; k <= count; ++k) {
    table.push_back(table.back() * (v - Rational(k - 1)) / Rational(k));
  }
  return table;
}

bool jet_deriv_binom_check(const Rational& x, unsigned s, unsigned t) {
  if (t > s) {
    throw UsageError("jet_deriv_binom_check requires t <= s");
  }
  const Jet lhs = binomial_gen(jet_var(x) + Rational(s), t);
  const Rational rhs = binomial_gen(x + Rational(s), t) * (harmonic1(s, x) - harmonic1(s - t, x));
  return lhs.c1 == rhs;
}

bool jet_deriv_harmonic_check(unsigned n, unsigned ell, const Rational& x) {
  const Jet lhs = harmonic(n, HarmonicOrder(ell), jet_var(x));
  const Rational rhs = -Rational(ell) * harmonic(n, HarmonicOrder(ell + 1), x);
  return lhs.c1 == rhs;
}

bool bisection_relation_check(unsigned k, const Rational& x) {
  const Rational half(1, 2);
  const Rational lhs = harmonic1(k, x * half) + harmonic1(k, (x - Rational(1)) * half);
  return lhs == Rational(2) * harmonic1(2 * k, x);
}

}  // namespace harmonid
