#pragma once

#include "quartic/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace quartic {

/// Dense univariate polynomial with rational coefficients, stored from the
/// constant term upward. The zero polynomial has no coefficients and degree -1.
class UPoly {
 public:
  UPoly() = default;
  UPoly(std::initializer_list<Rational> low_to_high);
  explicit UPoly(std::vector<Rational> low_to_high);

  static UPoly constant(const Rational& c);
  /// x - r
  static UPoly linear_root(const Rational& r);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& lead() const { return c_.back(); }
  /// Coefficient of x^k; zero beyond the degree.
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational operator()(const Rational& x) const;
  int sign_at(const Rational& x) const { return sgn((*this)(x)); }

  /// Enclosure of the polynomial's range over [lo, hi] by interval Horner.
  std::pair<Rational, Rational> eval_range(const Rational& lo, const Rational& hi) const;

  UPoly derivative() const;
  UPoly monic() const;
  UPoly operator-() const;

  friend UPoly operator+(const UPoly& p, const UPoly& q);
  friend UPoly operator-(const UPoly& p, const UPoly& q);
  friend UPoly operator*(const UPoly& p, const UPoly& q);
  friend UPoly operator*(const Rational& k, const UPoly& p);
  friend bool operator==(const UPoly& p, const UPoly& q) { return p.c_ == q.c_; }

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<UPoly, UPoly> divmod(const UPoly& divisor) const;
  UPoly operator%(const UPoly& divisor) const { return divmod(divisor).second; }
  UPoly operator/(const UPoly& divisor) const { return divmod(divisor).first; }

  /// p(x + h)
  UPoly shifted(const Rational& h) const;
  /// p(-x)
  UPoly reflected() const;

  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic greatest common divisor; gcd(0, 0) is the zero polynomial.
UPoly gcd(UPoly p, UPoly q);

/// p / gcd(p, p'), monic. Same distinct roots as p, each simple.
UPoly squarefree_part(const UPoly& p);

}  // namespace quartic
