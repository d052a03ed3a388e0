#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string_view>

#include "harmonid/rational.hpp"

namespace harmonid {

using Rng = std::mt19937_64;

struct RationalBounds {
  unsigned numerator = 12;
  unsigned denominator = 12;
};

inline constexpr unsigned kSampleRetryCap = 1000;

/// Uniform integer in [0, n), by rejection so the result does not depend on
/// the standard library's distribution implementation.
std::uint64_t uniform_below(Rng& rng, std::uint64_t n);

/// Uniform integer in [lo, hi].
long uniform_between(Rng& rng, long lo, long hi);

/// numerator uniform in [-bound, bound], denominator uniform in [1, bound],
/// reduced.
Rational sample_rational_unguarded(Rng& rng, const RationalBounds& bounds);

/// Rejection sampling against guard, at most kSampleRetryCap draws. Throws
/// SamplingError naming the context when every draw is rejected.
Rational sample_rational(Rng& rng, const RationalBounds& bounds, const std::function<bool(const Rational&)>& guard,
                         std::string_view context = "sample_rational");

/// Rational strictly inside (lo, hi) with denominator in [2, max_den].
Rational sample_rational_between(Rng& rng, const Rational& lo, const Rational& hi, unsigned max_den = 60);

/// Stable 64-bit seed for one identity track, mixed from the run seed.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view identity_id, std::uint64_t track);

}  // namespace harmonid
