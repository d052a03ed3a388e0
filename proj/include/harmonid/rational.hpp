#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace harmonid {

/// Exact rational number in canonical form: gcd(|num|, den) = 1, den >= 1,
/// zero is 0/1. Values are immutable; every operation returns a new value.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : q_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  /// Throws ArithmeticError when den == 0.
  Rational(long num, long den);

  explicit Rational(mpq_class q);

  /// Parses "num/den" or "num". Throws UsageError on malformed input and
  /// ArithmeticError on a zero denominator.
  static Rational parse(std::string_view text);

  const mpz_class& numerator() const { return q_.get_num(); }
  const mpz_class& denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// Integer value if this is an integer that fits in a long.
  bool fits_long() const { return is_integer() && q_.get_num().fits_slong_p(); }
  long to_long() const { return q_.get_num().get_si(); }

  double to_double() const { return q_.get_d(); }

  /// "num/den", sign carried on the numerator.
  std::string to_string() const;

  const mpq_class& raw() const { return q_; }

  Rational operator-() const;
  Rational reciprocal() const;
  Rational pow(int exponent) const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);

/// Big-integer multiplications performed by Rational arithmetic on the calling
/// thread: two per product or quotient, three per sum or difference.
std::uint64_t bigint_mul_count();
void reset_bigint_mul_count();

}  // namespace harmonid
