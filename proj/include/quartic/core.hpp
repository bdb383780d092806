#pragma once

#include "quartic/poly.hpp"
#include "quartic/quad_surd.hpp"
#include "quartic/rational.hpp"

#include <string>

namespace quartic {

/// Coefficients of the monic quartic x^4 + a x^3 + b x^2 + c x + d.
struct QuarticCoeffs {
  Rational a, b, c, d;

  /// Divides e x^4 + a x^3 + b x^2 + c x + d through by e. Rejects e = 0.
  static QuarticCoeffs from_general(const Rational& e, const Rational& a, const Rational& b, const Rational& c,
                                    const Rational& d);

  UPoly poly() const { return UPoly{d, c, b, a, 1}; }
  /// The x -> -x image (a, b, c, d) -> (-a, b, -c, d).
  QuarticCoeffs mirrored() const { return {-a, b, -c, d}; }

  std::string str() const;
};

inline bool operator==(const QuarticCoeffs& x, const QuarticCoeffs& y) {
  return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
}

/// y^4 + p y^2 + q y + r, the quartic after x = y - a/4.
struct DepressedQuartic {
  Rational p, q, r;
};

Rational eval_quartic(const QuarticCoeffs& coeffs, const Rational& x);
DepressedQuartic depress(const QuarticCoeffs& coeffs);
Rational eval_depressed(const DepressedQuartic& dq, const Rational& y);

/// x^2 (x^2 + a x + b), the half of the split drawn as a fixed curve.
UPoly subquartic(const QuarticCoeffs& coeffs);

/// A point on the extended real line. Finite values are exact surds.
struct ExtReal {
  enum class Kind { NegInf, Finite, PosInf };
  Kind kind = Kind::Finite;
  QuadSurd value;

  static ExtReal neg_inf() { return {Kind::NegInf, {}}; }
  static ExtReal pos_inf() { return {Kind::PosInf, {}}; }
  static ExtReal finite(const QuadSurd& v) { return {Kind::Finite, v}; }

  bool is_finite() const { return kind == Kind::Finite; }
  double to_double() const;
  std::string str() const;
};

/// Exact sign of x - y.
int compare(const ExtReal& x, const ExtReal& y);

/// Interval between two extended reals with per-end closedness and the
/// names of the landmarks that define each end.
struct Interval {
  ExtReal lo, hi;
  bool lo_closed = false, hi_closed = false;
  std::string lo_label, hi_label;

  static Interval open(const ExtReal& lo, const ExtReal& hi, std::string lo_label, std::string hi_label);
  static Interval point(const QuadSurd& x, const std::string& label);

  bool is_point() const;
  /// Exact test that x lies in the interval, honouring closedness.
  bool contains(const QuadSurd& x) const;
  /// Image under x -> -x, with ends and labels swapped.
  Interval mirrored() const;
};

}  // namespace quartic
