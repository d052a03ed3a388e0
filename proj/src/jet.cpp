#include "harmonid/jet.hpp"

#include <ostream>

#include "harmonid/error.hpp"

namespace harmonid {

Jet operator+(const Jet& a, const Jet& b) { return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2}; }

Jet operator-(const Jet& a, const Jet& b) { return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2}; }

Jet operator*(const Jet& a, const Jet& b) {
  return {a.c0 * b.c0, a.c0 * b.c1 + a.c1 * b.c0, a.c0 * b.c2 + a.c1 * b.c1 + a.c2 * b.c0};
}

Jet operator/(const Jet& a, const Jet& b) {
  if (b.c0.is_zero()) {
    throw PoleError("jet division by a zero-valued divisor", b.c0.to_string());
  }
  const Rational inv = b.c0.reciprocal();
  Jet q;
  q.c0 = a.c0 * inv;
  q.c1 = (a.c1 - q.c0 * b.c1) * inv;
  q.c2 = (a.c2 - q.c0 * b.c2 - q.c1 * b.c1) * inv;
  return q;
}

std::ostream& operator<<(std::ostream& os, const Jet& j) {
  return os << '(' << j.c0 << ", " << j.c1 << ", " << j.c2 << ')';
}

}  // namespace harmonid
