#pragma once

#include "quartic/poly.hpp"
#include "quartic/quad_surd.hpp"
#include "quartic/rational.hpp"

namespace quartic {

/// A real algebraic number held as a squarefree rational polynomial together
/// with an open rational interval (lo, hi) containing exactly one of its roots.
/// Rational values are held exactly with lo == hi.
///
/// Refinement shrinks the interval in place, so queries that may refine are
/// non-const. Sign queries are exact: a zero is detected through the gcd of
/// the defining polynomial with the query, never by tolerance.
class AlgebraicReal {
 public:
  AlgebraicReal() : lo_(0), hi_(0) {}

  static AlgebraicReal exact(const Rational& r);
  /// Precondition: poly is squarefree with opposite nonzero signs at lo < hi.
  /// Throws std::invalid_argument otherwise.
  static AlgebraicReal isolated(const UPoly& poly, const Rational& lo, const Rational& hi);
  static AlgebraicReal from_surd(const QuadSurd& x);

  bool is_rational() const { return lo_ == hi_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  const UPoly& poly() const { return poly_; }

  /// Halves the interval, or becomes exact when the midpoint is a root.
  void refine();
  void refine_to(const Rational& max_width);
  /// Becomes exact when the number is rational. A rational root of an
  /// integer polynomial has a denominator dividing the leading coefficient,
  /// so one candidate per bracket suffices. Returns is_rational().
  bool snap_rational();

  /// Exact sign of q at this number.
  int sign_of(const UPoly& q);

  /// Close double approximation; refines a private copy.
  double approx() const;

 private:
  UPoly poly_;
  Rational lo_, hi_;
  int sign_lo_ = 0;
};

/// Exact sign of x - r.
int compare(const AlgebraicReal& x, const Rational& r);
/// Exact sign of x - y; refines both as needed.
int compare(AlgebraicReal& x, AlgebraicReal& y);
int compare_surd(AlgebraicReal& x, const QuadSurd& y);

}  // namespace quartic
