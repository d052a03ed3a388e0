#pragma once

#include <concepts>
#include <vector>

#include "harmonid/error.hpp"
#include "harmonid/jet.hpp"
#include "harmonid/rational.hpp"

namespace harmonid {

template <typename T>
concept Scalar = std::same_as<T, Rational> || std::same_as<T, Jet>;

/// Order ell >= 1 of a generalized harmonic number.
class HarmonicOrder {
 public:
  explicit HarmonicOrder(unsigned ell);
  unsigned value() const { return ell_; }

 private:
  unsigned ell_;
};

template <Scalar T>
T scalar_one() {
  if constexpr (std::same_as<T, Jet>) {
    return Jet::constant(Rational(1));
  } else {
    return Rational(1);
  }
}

/// (x)_n = x(x+1)...(x+n-1), with (x)_0 = 1.
template <Scalar T>
T pochhammer(const T& x, unsigned n) {
  T result = scalar_one<T>();
  for (unsigned i = 0; i < n; ++i) {
    result = result * (x + Rational(i));
  }
  return result;
}

Rational factorial(unsigned n);

/// binom(z, t) = (z-t+1)_t / t!, valid for any scalar upper argument.
template <Scalar T>
T binomial_gen(const T& z, unsigned t) {
  return pochhammer(z - Rational(static_cast<long>(t) - 1), t) * factorial(t).reciprocal();
}

/// H_n^<ell>(x) = sum_{k=1}^{n} 1/(x+k)^ell. Throws PoleError naming k when
/// x + k = 0.
template <Scalar T>
T harmonic(unsigned n, HarmonicOrder ell, const T& x) {
  T sum{};
  for (unsigned k = 1; k <= n; ++k) {
    const T base = x + Rational(k);
    if (value_of(base).is_zero()) {
      throw PoleError("harmonic number pole at k=" + std::to_string(k), value_of(x).to_string(), k);
    }
    T power = base;
    for (unsigned e = 1; e < ell.value(); ++e) {
      power = power * base;
    }
    sum = sum + Rational(1) / power;
  }
  return sum;
}

/// Shorthands for the orders used throughout the identity catalog.
inline Rational harmonic1(unsigned n, const Rational& x) { return harmonic(n, HarmonicOrder(1), x); }
inline Rational harmonic2(unsigned n, const Rational& x) { return harmonic(n, HarmonicOrder(2), x); }

/// [H_0^<ell>(x), ..., H_count^<ell>(x)] by running sums.
std::vector<Rational> harmonic_table(const Rational& x, unsigned count, HarmonicOrder ell = HarmonicOrder(1));

/// [binom(u+k, k)] for k = 0..count, by the ratio (u+k)/k.
std::vector<Rational> shifted_binomial_table(const Rational& u, unsigned count);

/// [binom(v, k)] for k = 0..count, by the ratio (v-k+1)/k.
std::vector<Rational> binomial_table(const Rational& v, unsigned count);

/// d/dx binom(x+s, t) = binom(x+s, t) {H_s(x) - H_{s-t}(x)}, checked by jet
/// differentiation against the closed form. Requires t <= s.
bool jet_deriv_binom_check(const Rational& x, unsigned s, unsigned t);

/// d/dx H_n^<ell>(x) = -ell H_n^<ell+1>(x).
bool jet_deriv_harmonic_check(unsigned n, unsigned ell, const Rational& x);

/// H_k(x/2) + H_k((x-1)/2) = 2 H_{2k}(x).
bool bisection_relation_check(unsigned k, const Rational& x);

}  // namespace harmonid
