#include "harmonid/rational.hpp"

#include <ostream>

#include "harmonid/error.hpp"

namespace harmonid {

namespace {

thread_local std::uint64_t g_mul_count = 0;

}  // namespace

std::uint64_t bigint_mul_count() { return g_mul_count; }
void reset_bigint_mul_count() { g_mul_count = 0; }

Rational::Rational(long num, long den) {
  if (den == 0) {
    throw ArithmeticError("rational with zero denominator: " + std::to_string(num) + "/0");
  }
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string num_text(text.substr(0, slash));
  const std::string den_text = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  mpz_class num;
  mpz_class den;
  if (num_text.empty() || den_text.empty() || num.set_str(num_text, 10) != 0 || den.set_str(den_text, 10) != 0) {
    throw UsageError("malformed rational: '" + std::string(text) + "'");
  }
  if (den == 0) {
    throw ArithmeticError("rational with zero denominator: '" + std::string(text) + "'");
  }
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::to_string() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

Rational Rational::reciprocal() const {
  if (is_zero()) {
    throw ArithmeticError("reciprocal of zero");
  }
  Rational r;
  mpq_inv(r.q_.get_mpq_t(), q_.get_mpq_t());
  return r;
}

Rational Rational::pow(int exponent) const {
  if (exponent < 0) {
    return reciprocal().pow(-exponent);
  }
  Rational result(1);
  Rational base = *this;
  for (auto e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
    if ((e & 1U) != 0) {
      result *= base;
    }
    if (e > 1) {
      base *= base;
    }
  }
  return result;
}

Rational operator+(const Rational& a, const Rational& b) {
  g_mul_count += 3;
  Rational r;
  r.q_ = a.q_ + b.q_;
  return r;
}

Rational operator-(const Rational& a, const Rational& b) {
  g_mul_count += 3;
  Rational r;
  r.q_ = a.q_ - b.q_;
  return r;
}

Rational operator*(const Rational& a, const Rational& b) {
  g_mul_count += 2;
  Rational r;
  r.q_ = a.q_ * b.q_;
  return r;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) {
    throw ArithmeticError("division by zero: " + a.to_string() + " / 0");
  }
  g_mul_count += 2;
  Rational r;
  r.q_ = a.q_ / b.q_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace harmonid
