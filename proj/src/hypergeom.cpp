#include "harmonid/hypergeom.hpp"

#include <array>
#include <cstdio>
#include <cmath>
#include <numbers>
#include <string>
#include <tuple>

#include "harmonid/error.hpp"
#include "harmonid/special.hpp"

namespace harmonid {

namespace {

std::string format_double(double x) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.17g", x);
  return buf.data();
}

bool is_nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// sin(pi x) with the argument reduced to [-1/2, 1/2] first.
double sin_pi(double x) {
  const double n = std::round(x);
  const double r = x - n;
  const double s = std::sin(std::numbers::pi * r);
  return std::fmod(n, 2.0) == 0.0 ? s : -s;
}

Rational checked_div(const Rational& num, const Rational& den, const char* what) {
  if (den.is_zero()) {
    throw PoleError(std::string("zero denominator factor in ") + what, den.to_string());
  }
  return num / den;
}

}  // namespace

std::optional<unsigned> termination_index(const PfqSpec& spec) {
  std::optional<unsigned> best;
  for (const auto& a : spec.numerator) {
    if (a.sign() <= 0 && a.is_integer()) {
      if (!a.fits_long()) {
        continue;
      }
      const auto n = static_cast<unsigned>(-a.to_long());
      if (!best || n < *best) {
        best = n;
      }
    }
  }
  return best;
}

Rational pfq_exact(const PfqSpec& spec) {
  const auto last = termination_index(spec);
  if (!last) {
    throw ModeError("exact summation needs a nonpositive integer numerator parameter");
  }
  Rational sum(0);
  for (unsigned k = 0; k <= *last; ++k) {
    Rational num = spec.argument.pow(static_cast<int>(k));
    for (const auto& a : spec.numerator) {
      num = num * pochhammer(a, k);
    }
    Rational den = factorial(k);
    for (const auto& b : spec.denominator) {
      const Rational factor = pochhammer(b, k);
      if (factor.is_zero()) {
        throw PoleError("zero denominator factor at k=" + std::to_string(k), b.to_string(), k);
      }
      den = den * factor;
    }
    sum = sum + num / den;
  }
  return sum;
}

Rational pfq_exact_incremental(const PfqSpec& spec) {
  const auto last = termination_index(spec);
  if (!last) {
    throw ModeError("exact summation needs a nonpositive integer numerator parameter");
  }
  Rational term(1);
  Rational sum(1);
  for (unsigned k = 0; k < *last; ++k) {
    Rational num = spec.argument;
    for (const auto& a : spec.numerator) {
      num = num * (a + Rational(k));
    }
    Rational den(k + 1);
    for (const auto& b : spec.denominator) {
      const Rational factor = b + Rational(k);
      if (factor.is_zero()) {
        throw PoleError("zero denominator factor at k=" + std::to_string(k + 1), b.to_string(), k + 1);
      }
      den = den * factor;
    }
    term = term * num / den;
    sum = sum + term;
  }
  return sum;
}

double gamma_float(double x) {
  static constexpr double kG = 7.0;
  static constexpr std::array<double, 9> kCoeff = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

  if (is_nonpositive_integer(x)) {
    throw PoleError("gamma pole at " + format_double(x), format_double(x));
  }
  if (x < 0.5) {
    return std::numbers::pi / (sin_pi(x) * gamma_float(1.0 - x));
  }
  const double z = x - 1.0;
  double acc = kCoeff[0];
  for (std::size_t i = 1; i < kCoeff.size(); ++i) {
    acc += kCoeff[i] / (z + static_cast<double>(i));
  }
  const double t = z + kG + 0.5;
  // t^(z+1/2) e^-t split in two halves to stay finite near x = 170.
  const double half = std::pow(t, 0.5 * (z + 0.5));
  return std::sqrt(2.0 * std::numbers::pi) * half * (half * std::exp(-t)) * acc;
}

FloatSum pfq_float(const RealPfqSpec& spec, double tol, std::size_t max_terms) {
  FloatSum out;
  double term = 1.0;
  double sum = 1.0;
  double carry = 0.0;  // Kahan compensation
  int small_run = 0;
  out.terms = 1;
  for (std::size_t k = 0; out.terms < max_terms; ++k) {
    const double kk = static_cast<double>(k);
    double ratio = spec.argument / (kk + 1.0);
    for (double a : spec.numerator) {
      ratio *= a + kk;
    }
    for (double b : spec.denominator) {
      const double factor = b + kk;
      if (factor == 0.0) {
        throw PoleError("zero denominator factor at k=" + std::to_string(k + 1), format_double(b),
                        static_cast<long>(k + 1));
      }
      ratio /= factor;
    }
    term *= ratio;
    const double y = term - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
    ++out.terms;
    if (!std::isfinite(sum)) {
      break;
    }
    if (std::abs(term) < tol * std::abs(sum)) {
      if (++small_run >= 3) {
        out.converged = true;
        break;
      }
    } else {
      small_run = 0;
    }
  }
  out.value = sum;
  return out;
}

double gamma_rhs(std::span<const GammaFactor> factors, double prefactor) {
  double value = prefactor;
  for (const auto& f : factors) {
    if (is_nonpositive_integer(f.argument)) {
      throw PoleError("gamma pole at argument " + format_double(f.argument), format_double(f.argument));
    }
    const double g = gamma_float(f.argument);
    value = f.exponent >= 0 ? value * std::pow(g, f.exponent) : value / std::pow(g, -f.exponent);
  }
  return value;
}

double dougall_gamma_rhs(double a, double b, double c, double d) {
  const std::array<GammaFactor, 8> f = {{{1, 1 + a - b},
                                         {1, 1 + a - c},
                                         {1, 1 + a - d},
                                         {1, 1 + a - b - c - d},
                                         {-1, 1 + a},
                                         {-1, 1 + a - b - c},
                                         {-1, 1 + a - b - d},
                                         {-1, 1 + a - c - d}}};
  return gamma_rhs(f);
}

double dixon_gamma_rhs(double a, double b, double c) {
  const std::array<GammaFactor, 8> f = {{{1, 1 + a / 2},
                                         {1, 1 + a - b},
                                         {1, 1 + a - c},
                                         {1, 1 + a / 2 - b - c},
                                         {-1, 1 + a},
                                         {-1, 1 + a / 2 - b},
                                         {-1, 1 + a / 2 - c},
                                         {-1, 1 + a - b - c}}};
  return gamma_rhs(f);
}

double dixonlike_gamma_rhs(double a, double b, double c) {
  const double scale = std::pow(2.0, -1.0 - c);
  const std::array<GammaFactor, 8> first = {{{1, 1 + a - b},
                                             {1, (1 + a) / 2 - b - c},
                                             {1, (a - c) / 2},
                                             {1, (1 + a - c) / 2},
                                             {-1, 1 + a - b - c},
                                             {-1, a / 2},
                                             {-1, (1 + a) / 2 - b},
                                             {-1, (1 + a) / 2 - c}}};
  const std::array<GammaFactor, 8> second = {{{1, 1 + a - b},
                                              {1, (2 + a) / 2 - b - c},
                                              {1, (a - c) / 2},
                                              {1, (1 + a - c) / 2},
                                              {-1, 1 + a - b - c},
                                              {-1, (1 + a) / 2},
                                              {-1, (2 + a) / 2 - b},
                                              {-1, a / 2 - c}}};
  return gamma_rhs(first, scale) + gamma_rhs(second, scale);
}

double whipple_gamma_rhs(double a, double b, double c) {
  const std::array<GammaFactor, 6> f = {{{1, c},
                                         {1, 1 + 2 * b - c},
                                         {-1, (a + c) / 2},
                                         {-1, (1 + a - c) / 2 + b},
                                         {-1, (1 - a + c) / 2},
                                         {-1, (2 - a - c) / 2 + b}}};
  return gamma_rhs(f, std::numbers::pi * std::pow(2.0, 1 - 2 * b));
}

double whipple_shifted_gamma_rhs(double a, double b, double c) {
  const std::array<GammaFactor, 6> f = {{{1, c},
                                         {1, 1 + 2 * b - c},
                                         {-1, (1 + a + c) / 2},
                                         {-1, (2 + a - c) / 2 + b},
                                         {-1, (-a + c) / 2},
                                         {-1, (1 - a - c) / 2 + b}}};
  return gamma_rhs(f, std::numbers::pi * std::pow(2.0, 1 - 2 * b));
}

double whipple_like_gamma_rhs(double a, double b, double c) {
  return 0.5 * whipple_gamma_rhs(a, b, c) + 0.5 * whipple_shifted_gamma_rhs(a, b, c);
}

double kummer_gamma_prefactor(double a, double b, double c, double d, double e) {
  const std::array<GammaFactor, 4> f = {{{1, e}, {1, d + e - a - b - c}, {-1, e - a}, {-1, d + e - b - c}}};
  return gamma_rhs(f);
}

namespace {

void expect_params(std::span<const Rational> params, std::size_t count) {
  if (params.size() != count) {
    throw UsageError("terminating reduction expects " + std::to_string(count) + " parameters, got " +
                     std::to_string(params.size()));
  }
}

}  // namespace

PfqSpec terminating_series(TerminatingForm form, unsigned n, std::span<const Rational> params) {
  const Rational minus_n = -Rational(n);
  switch (form) {
    case TerminatingForm::dougall_d:
      expect_params(params, 3);
      return dougall_series(params[0], params[1], params[2], minus_n);
    case TerminatingForm::dixon_c:
      expect_params(params, 2);
      return dixon_series(params[0], params[1], minus_n);
    case TerminatingForm::dixonlike_c:
      expect_params(params, 2);
      return dixonlike_series(params[0], params[1], minus_n);
    case TerminatingForm::kummer_a:
      expect_params(params, 4);
      return kummer_series(minus_n, params[0], params[1], params[2], params[3]);
  }
  throw UsageError("unknown terminating form");
}

Rational terminating_gamma_reduction(TerminatingForm form, unsigned n, std::span<const Rational> params) {
  const Rational one(1);
  const Rational two(2);
  switch (form) {
    case TerminatingForm::dougall_d: {
      expect_params(params, 3);
      const auto& [a, b, c] = std::tie(params[0], params[1], params[2]);
      const Rational num = pochhammer(one + a, n) * pochhammer(one + a - b - c, n);
      const Rational den = pochhammer(one + a - b, n) * pochhammer(one + a - c, n);
      return checked_div(num, den, "Dougall closed form");
    }
    case TerminatingForm::dixon_c: {
      expect_params(params, 2);
      const auto& [a, b] = std::tie(params[0], params[1]);
      const Rational num = pochhammer(one + a, n) * pochhammer(one + a / two - b, n);
      const Rational den = pochhammer(one + a / two, n) * pochhammer(one + a - b, n);
      return checked_div(num, den, "Dixon closed form");
    }
    case TerminatingForm::dixonlike_c: {
      expect_params(params, 2);
      const auto& [a, b] = std::tie(params[0], params[1]);
      const Rational scale = two.pow(2 * static_cast<int>(n) - 1);
      const Rational den = pochhammer(a + Rational(n), n) * pochhammer(one + a - b, n);
      const Rational first = pochhammer((one + a) / two, n) * pochhammer((two + a) / two - b, n);
      const Rational second = pochhammer(a / two, n) * pochhammer((one + a) / two - b, n);
      return scale * checked_div(first + second, den, "Dixon-like closed form");
    }
    case TerminatingForm::kummer_a: {
      expect_params(params, 4);
      const auto& [b, c, d, e] = std::tie(params[0], params[1], params[2], params[3]);
      const Rational prefactor = checked_div(pochhammer(d + e - b - c, n), pochhammer(e, n), "Kummer prefactor");
      return prefactor * pfq_exact(kummer_transformed_series(-Rational(n), b, c, d, e));
    }
  }
  throw UsageError("unknown terminating form");
}

}  // namespace harmonid
