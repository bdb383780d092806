#pragma once

#include "quartic/poly.hpp"
#include "quartic/rational.hpp"

#include <string>
#include <utility>

namespace quartic {

/// Exact value u + v*sqrt(s) with rational u, v and s >= 0.
///
/// Construction canonicalizes: v = s = 0 when either is zero, and a radicand
/// that is the square of a rational is folded into u. Two surds with equal
/// nonzero radicands combine under +, - and *.
class QuadSurd {
 public:
  QuadSurd() = default;
  QuadSurd(const Rational& u);  // NOLINT(google-explicit-constructor)
  QuadSurd(int u) : QuadSurd(Rational(u)) {}  // NOLINT(google-explicit-constructor)
  QuadSurd(const Rational& u, const Rational& v, const Rational& s);

  const Rational& u() const { return u_; }
  const Rational& v() const { return v_; }
  const Rational& s() const { return s_; }
  bool is_rational() const { return v_ == 0; }

  /// The algebraic conjugate u - v*sqrt(s).
  QuadSurd conjugate() const { return QuadSurd(u_, -v_, s_); }

  friend QuadSurd operator+(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator-(const QuadSurd& x, const QuadSurd& y);
  friend QuadSurd operator*(const QuadSurd& x, const QuadSurd& y);
  QuadSurd operator-() const { return QuadSurd(-u_, -v_, s_); }

  double to_double() const;
  /// Rational enclosure [lo, hi] of width at most 1/scale (degenerate when rational).
  std::pair<Rational, Rational> bracket(const mpz_class& scale) const;

  std::string str() const;

 private:
  Rational u_, v_, s_;
};

/// Exact sign of u + v*sqrt(s). Throws std::domain_error when s < 0.
int surd_sign(const Rational& u, const Rational& v, const Rational& s);
int surd_sign(const QuadSurd& x);

/// Exact sign of x - y, valid for any radicands.
int compare(const QuadSurd& x, const QuadSurd& y);

inline bool operator==(const QuadSurd& x, const QuadSurd& y) { return compare(x, y) == 0; }
inline bool operator<(const QuadSurd& x, const QuadSurd& y) { return compare(x, y) < 0; }
inline bool operator<=(const QuadSurd& x, const QuadSurd& y) { return compare(x, y) <= 0; }

/// Root of x^2 + b x + c; plus_root picks the larger. Requires b^2 - 4c >= 0.
QuadSurd quadratic_root(const Rational& b, const Rational& c, bool plus_root);

/// Exact p(x).
QuadSurd evaluate(const UPoly& p, const QuadSurd& x);

/// Monic polynomial of least degree with x as a root: x - u, or
/// (x - u)^2 - v^2 s for an irrational surd.
UPoly minimal_poly(const QuadSurd& x);

}  // namespace quartic
