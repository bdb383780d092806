#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace quartic {

using Rational = mpq_class;

/// Sign of a rational as -1, 0 or +1.
inline int sgn(const Rational& x) { return ::sgn(x); }

/// Parses "p", "p/q" or a decimal such as "-1.63" or "2.5e-3" into an exact
/// rational. Returns nullopt on malformed text or a zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

/// Canonical "p/q" text, or "p" when the denominator is 1.
std::string to_string(const Rational& x);

double to_double(const Rational& x);

/// Floor and ceiling as rationals with unit denominator.
Rational floor_of(const Rational& x);
Rational ceil_of(const Rational& x);

/// Exact rational equal to a finite double.
Rational from_double(double x);

/// Largest k/scale with (k/scale)^2 <= x, for x >= 0 and scale > 0.
/// So sqrt(x) lies in [r, r + 1/scale).
Rational sqrt_floor(const Rational& x, const mpz_class& scale);

}  // namespace quartic
