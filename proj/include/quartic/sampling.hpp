#pragma once

// Seeded generators for rational inputs, shared by the sweep command and the tests.

#include "quartic/core.hpp"

#include <cstdint>
#include <random>

namespace quartic::sampling {

/// Uniform integer in [0, n) by rejection; independent of the standard
/// library's distribution implementation.
inline std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % n;
}

/// Rational p/q with 1 <= q <= max_den and |p/q| <= bound.
inline Rational random_rational(std::mt19937_64& rng, long bound, long max_den) {
  const long q = 1 + static_cast<long>(below(rng, static_cast<std::uint64_t>(max_den)));
  const long span = 2 * bound * q + 1;
  const long p = static_cast<long>(below(rng, static_cast<std::uint64_t>(span))) - bound * q;
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline QuarticCoeffs random_coeffs(std::mt19937_64& rng, long bound = 10, long max_den = 16) {
  QuarticCoeffs k;
  k.a = random_rational(rng, bound, max_den);
  k.b = random_rational(rng, bound, max_den);
  k.c = random_rational(rng, bound, max_den);
  k.d = random_rational(rng, bound, max_den);
  return k;
}

}  // namespace quartic::sampling
