#include "harmonid/sampling.hpp"

#include <algorithm>
#include <string>

#include "harmonid/error.hpp"

namespace harmonid {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

}  // namespace

std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  if (n <= 1) {
    return 0;
  }
  const std::uint64_t limit = Rng::max() - (Rng::max() % n);
  std::uint64_t v = rng();
  while (v >= limit) {
    v = rng();
  }
  return v % n;
}

long uniform_between(Rng& rng, long lo, long hi) {
  return lo + static_cast<long>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

Rational sample_rational_unguarded(Rng& rng, const RationalBounds& bounds) {
  const long num_bound = static_cast<long>(bounds.numerator);
  const long den_bound = std::max<long>(1, static_cast<long>(bounds.denominator));
  const long num = uniform_between(rng, -num_bound, num_bound);
  const long den = uniform_between(rng, 1, den_bound);
  return Rational(num, den);
}

Rational sample_rational(Rng& rng, const RationalBounds& bounds, const std::function<bool(const Rational&)>& guard,
                         std::string_view context) {
  for (unsigned attempt = 0; attempt < kSampleRetryCap; ++attempt) {
    Rational r = sample_rational_unguarded(rng, bounds);
    if (!guard || guard(r)) {
      return r;
    }
  }
  throw SamplingError(std::string(context) + ": guard rejected " + std::to_string(kSampleRetryCap) + " draws");
}

Rational sample_rational_between(Rng& rng, const Rational& lo, const Rational& hi, unsigned max_den) {
  // With den >= 2 and an interval of width >= 1/den the open range holds a
  // multiple of 1/den; retry otherwise.
  for (unsigned attempt = 0; attempt < kSampleRetryCap; ++attempt) {
    const long den = uniform_between(rng, 2, std::max<long>(2, max_den));
    const Rational scaled_lo = lo * Rational(den);
    const Rational scaled_hi = hi * Rational(den);
    mpz_class first;
    mpz_fdiv_q(first.get_mpz_t(), scaled_lo.numerator().get_mpz_t(), scaled_lo.denominator().get_mpz_t());
    first += 1;
    mpz_class last;
    mpz_cdiv_q(last.get_mpz_t(), scaled_hi.numerator().get_mpz_t(), scaled_hi.denominator().get_mpz_t());
    last -= 1;
    if (last < first) {
      continue;
    }
    const long lo_num = first.get_si();
    const long hi_num = last.get_si();
    return Rational(uniform_between(rng, lo_num, hi_num), den);
  }
  throw SamplingError("empty sampling interval (" + lo.to_string() + ", " + hi.to_string() + ")");
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view identity_id, std::uint64_t track) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (const unsigned char ch : identity_id) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return splitmix64(seed ^ splitmix64(h + track));
}

}  // namespace harmonid
