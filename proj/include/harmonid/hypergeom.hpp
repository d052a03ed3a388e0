#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "harmonid/rational.hpp"

namespace harmonid {

/// Parameters of sum_k prod(a_i)_k / [(1)_k prod(b_j)_k] z^k.
template <typename T>
struct BasicPfqSpec {
  std::vector<T> numerator;
  std::vector<T> denominator;
  T argument{1};
};

using PfqSpec = BasicPfqSpec<Rational>;
using RealPfqSpec = BasicPfqSpec<double>;

/// Smallest N such that some numerator parameter equals -N, if any.
std::optional<unsigned> termination_index(const PfqSpec& spec);

/// Exact terminating sum with every term built from fresh Pochhammer products.
/// Throws ModeError for a non-terminating spec and PoleError (carrying k) for
/// a zero denominator factor before termination.
Rational pfq_exact(const PfqSpec& spec);

/// Same value as pfq_exact, advancing each term by the ratio
/// z prod(a_i+k) / [(1+k) prod(b_j+k)].
Rational pfq_exact_incremental(const PfqSpec& spec);

/// Lanczos approximation (g = 7, 9 coefficients) with reflection below 1/2.
/// Throws PoleError at nonpositive integers.
double gamma_float(double x);

struct FloatSum {
  double value = 0.0;
  bool converged = false;
  std::size_t terms = 0;
};

/// Truncated series: stops once |term| < tol * |partial| holds for three
/// consecutive terms, or after max_terms terms (converged = false).
FloatSum pfq_float(const RealPfqSpec& spec, double tol, std::size_t max_terms);

struct GammaFactor {
  int exponent;  // +1 numerator, -1 denominator
  double argument;
};

/// prefactor * prod Gamma(argument)^exponent. Throws PoleError naming the
/// argument when it is a nonpositive integer.
double gamma_rhs(std::span<const GammaFactor> factors, double prefactor = 1.0);

// Series specs for the gamma-form summation theorems, generic over Rational
// (exact track) and double (float track).

/// 5F4(a, 1+a/2, b, c, d; a/2, 1+a-b, 1+a-c, 1+a-d; 1)
template <typename T>
BasicPfqSpec<T> dougall_series(const T& a, const T& b, const T& c, const T& d) {
  const T one(1);
  const T two(2);
  return {{a, one + a / two, b, c, d}, {a / two, one + a - b, one + a - c, one + a - d}, one};
}

/// 3F2(a, b, c; 1+a-b, 1+a-c; 1)
template <typename T>
BasicPfqSpec<T> dixon_series(const T& a, const T& b, const T& c) {
  const T one(1);
  return {{a, b, c}, {one + a - b, one + a - c}, one};
}

/// 3F2(a, b, c; 1+a-b, a-c; 1)
template <typename T>
BasicPfqSpec<T> dixonlike_series(const T& a, const T& b, const T& c) {
  const T one(1);
  return {{a, b, c}, {one + a - b, a - c}, one};
}

/// 3F2(a, 1-a, b; c, 1+2b-c; 1)
template <typename T>
BasicPfqSpec<T> whipple_series(const T& a, const T& b, const T& c) {
  const T one(1);
  const T two(2);
  return {{a, one - a, b}, {c, one + two * b - c}, one};
}

/// 3F2(1+a, -a, b; c, 1+2b-c; 1)
template <typename T>
BasicPfqSpec<T> whipple_shifted_series(const T& a, const T& b, const T& c) {
  const T one(1);
  const T two(2);
  return {{one + a, -a, b}, {c, one + two * b - c}, one};
}

/// 3F2(a, -a, b; c, 1+2b-c; 1)
template <typename T>
BasicPfqSpec<T> whipple_like_series(const T& a, const T& b, const T& c) {
  const T one(1);
  const T two(2);
  return {{a, -a, b}, {c, one + two * b - c}, one};
}

/// 3F2(a, b, c; d, e; 1)
template <typename T>
BasicPfqSpec<T> kummer_series(const T& a, const T& b, const T& c, const T& d, const T& e) {
  return {{a, b, c}, {d, e}, T(1)};
}

/// Kummer's right-hand series 3F2(a, d-b, d-c; d, d+e-b-c; 1)
template <typename T>
BasicPfqSpec<T> kummer_transformed_series(const T& a, const T& b, const T& c, const T& d, const T& e) {
  return {{a, d - b, d - c}, {d, d + e - b - c}, T(1)};
}

// Gamma-quotient closed forms (float track).
double dougall_gamma_rhs(double a, double b, double c, double d);
double dixon_gamma_rhs(double a, double b, double c);
double dixonlike_gamma_rhs(double a, double b, double c);
double whipple_gamma_rhs(double a, double b, double c);
double whipple_shifted_gamma_rhs(double a, double b, double c);
double whipple_like_gamma_rhs(double a, double b, double c);
/// Gamma prefactor of Kummer's transformation; multiply by the transformed series.
double kummer_gamma_prefactor(double a, double b, double c, double d, double e);

/// Which parameter of which theorem is set to -n.
enum class TerminatingForm { dougall_d, dixon_c, dixonlike_c, kummer_a };

/// Exact right-hand side after Gamma(z+n)/Gamma(z) = (z)_n. Parameters, in order:
///   dougall_d:   a, b, c       -> (1+a)_n (1+a-b-c)_n / [(1+a-b)_n (1+a-c)_n]
///   dixon_c:     a, b          -> (1+a)_n (1+a/2-b)_n / [(1+a/2)_n (1+a-b)_n]
///   dixonlike_c: a, b          -> 2^{2n-1} [((1+a)/2)_n ((2+a)/2-b)_n + (a/2)_n ((1+a)/2-b)_n]
///                                 / [(a+n)_n (1+a-b)_n]
///   kummer_a:    b, c, d, e    -> (d+e-b-c)_n / (e)_n * 3F2(-n, d-b, d-c; d, d+e-b-c; 1)
/// Throws PoleError for a zero denominator factor and UsageError for a wrong
/// parameter count.
Rational terminating_gamma_reduction(TerminatingForm form, unsigned n, std::span<const Rational> params);

/// The terminating left-hand series matching terminating_gamma_reduction.
PfqSpec terminating_series(TerminatingForm form, unsigned n, std::span<const Rational> params);

}  // namespace harmonid
