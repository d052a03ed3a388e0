#pragma once

#include <iosfwd>

#include "harmonid/rational.hpp"

namespace harmonid {

/// Order-2 truncated Taylor expansion f(x+t) = c0 + c1 t + c2 t^2 + O(t^3).
/// c1 is the first derivative and 2*c2 the second derivative at the seed.
struct Jet {
  Rational c0;
  Rational c1;
  Rational c2;

  static Jet variable(const Rational& x) { return {x, Rational(1), Rational(0)}; }
  static Jet constant(const Rational& v) { return {v, Rational(0), Rational(0)}; }

  const Rational& value() const { return c0; }
  const Rational& first() const { return c1; }
  Rational second() const { return Rational(2) * c2; }

  Jet operator-() const { return {-c0, -c1, -c2}; }

  friend bool operator==(const Jet&, const Jet&) = default;
};

inline Jet jet_var(const Rational& x) { return Jet::variable(x); }
inline Jet jet_const(const Rational& v) { return Jet::constant(v); }

Jet operator+(const Jet& a, const Jet& b);
Jet operator-(const Jet& a, const Jet& b);
Jet operator*(const Jet& a, const Jet& b);
/// Throws PoleError when b.c0 == 0.
Jet operator/(const Jet& a, const Jet& b);

inline Jet operator+(const Jet& a, const Rational& b) { return {a.c0 + b, a.c1, a.c2}; }
inline Jet operator+(const Rational& a, const Jet& b) { return b + a; }
inline Jet operator-(const Jet& a, const Rational& b) { return {a.c0 - b, a.c1, a.c2}; }
inline Jet operator-(const Rational& a, const Jet& b) { return {a - b.c0, -b.c1, -b.c2}; }
inline Jet operator*(const Jet& a, const Rational& b) { return {a.c0 * b, a.c1 * b, a.c2 * b}; }
inline Jet operator*(const Rational& a, const Jet& b) { return b * a; }
inline Jet operator/(const Jet& a, const Rational& b) { return a * b.reciprocal(); }
inline Jet operator/(const Rational& a, const Jet& b) { return Jet::constant(a) / b; }

inline Jet& operator+=(Jet& a, const Jet& b) { return a = a + b; }
inline Jet& operator-=(Jet& a, const Jet& b) { return a = a - b; }
inline Jet& operator*=(Jet& a, const Jet& b) { return a = a * b; }
inline Jet& operator/=(Jet& a, const Jet& b) { return a = a / b; }

std::ostream& operator<<(std::ostream& os, const Jet& j);

/// Value component of a scalar, for pole checks in code generic over
/// Rational and Jet.
inline const Rational& value_of(const Rational& r) { return r; }
inline const Rational& value_of(const Jet& j) { return j.c0; }

}  // namespace harmonid
