#pragma once

#include <string>
#include <vector>

#include "harmonid/catalog.hpp"
#include "harmonid/error.hpp"
#include "harmonid/special.hpp"

namespace harmonid::detail {

using R = Rational;

inline R H(unsigned n, const R& x) { return harmonic1(n, x); }
inline R H(unsigned n) { return harmonic1(n, R(0)); }
inline R H2(unsigned n, const R& x) { return harmonic2(n, x); }
inline R H2(unsigned n) { return harmonic2(n, R(0)); }
inline R binom(const R& z, unsigned t) { return binomial_gen(z, t); }
inline R two_pow(int e) { return R(2).pow(e); }
inline R sign_of(unsigned k) { return k % 2 == 0 ? R(1) : R(-1); }

/// num / den, reporting a zero den as a pole.
inline R over(const R& num, const R& den) {
  if (den.is_zero()) {
    throw PoleError("zero denominator", num.to_string());
  }
  return num / den;
}

/// Accumulates "no zero denominator factor" conditions for one point.
class PoleGuard {
 public:
  PoleGuard& nonzero(const R& v) {
    ok_ = ok_ && !v.is_zero();
    return *this;
  }

  /// binom(z, t') != 0 for every t' <= t, i.e. z is not an integer in [0, t-1].
  PoleGuard& binomial(const R& z, unsigned t) {
    ok_ = ok_ && !integer_in(z, 0, static_cast<long>(t) - 1);
    return *this;
  }

  /// binom(u+k, k) != 0 for every k <= count, i.e. u is not an integer in [-count, -1].
  PoleGuard& shifted_binomial(const R& u, unsigned count) {
    ok_ = ok_ && !integer_in(u, -static_cast<long>(count), -1);
    return *this;
  }

  /// H_n^<l>(x) is defined: x is not an integer in [-n, -1].
  PoleGuard& harmonic(const R& x, unsigned n) { return shifted_binomial(x, n); }

  /// (x)_n != 0: x is not an integer in [1-n, 0].
  PoleGuard& pochhammer(const R& x, unsigned n) {
    ok_ = ok_ && !integer_in(x, 1 - static_cast<long>(n), 0);
    return *this;
  }

  /// Gamma(x) finite: x is not a nonpositive integer.
  PoleGuard& gamma(const R& x) {
    ok_ = ok_ && !(x.is_integer() && x.sign() <= 0);
    return *this;
  }

  explicit operator bool() const { return ok_; }

 private:
  static bool integer_in(const R& v, long lo, long hi) {
    if (!v.is_integer() || lo > hi) {
      return false;
    }
    return v >= R(lo) && v <= R(hi);
  }

  bool ok_ = true;
};

inline Param index_param(std::string name = "n") { return {std::move(name), ParamKind::natural, SweepAxis::index}; }
inline Param positive_index_param(std::string name = "n") {
  return {std::move(name), ParamKind::natural_positive, SweepAxis::index};
}
inline Param p_param() { return {"p", ParamKind::natural, SweepAxis::p}; }
inline Param q_param() { return {"q", ParamKind::natural, SweepAxis::q}; }
inline Param rational_param(std::string name) { return {std::move(name), ParamKind::rational, SweepAxis::none}; }

/// Exact-mode check with a single track.
inline IdentitySpec exact_identity(std::string id, std::string anchor, std::vector<Param> params, Predicate guard,
                                   ExactEvaluator lhs, ExactEvaluator rhs, Predicate constraint = {}) {
  Check check;
  check.label = "exact";
  check.mode = Mode::exact;
  check.params = std::move(params);
  check.constraint = std::move(constraint);
  check.pole_guard = std::move(guard);
  check.lhs = std::move(lhs);
  check.rhs = std::move(rhs);
  return IdentitySpec{std::move(id), std::move(anchor), {std::move(check)}};
}

/// W_k for k = 0..2n: (-1)^k binom(2n,k) binom(x+k,k) binom(y+k,k) / [binom(x+2n,k) binom(y+2n,k)].
std::vector<R> dixon_weights(unsigned n, const R& x, const R& y);

void add_gamma_forms(std::vector<IdentitySpec>& out);
void add_dixon_family(std::vector<IdentitySpec>& out);
void add_dixonlike_family(std::vector<IdentitySpec>& out);
void add_dougall_family(std::vector<IdentitySpec>& out);

}  // namespace harmonid::detail
