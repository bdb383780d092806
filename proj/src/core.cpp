#include "quartic/core.hpp"

#include <limits>
#include <stdexcept>

namespace quartic {

QuarticCoeffs QuarticCoeffs::from_general(const Rational& e, const Rational& a, const Rational& b, const Rational& c,
                                          const Rational& d) {
  if (e == 0) throw std::invalid_argument("leading coefficient is zero");
  return {a / e, b / e, c / e, d / e};
}

std::string QuarticCoeffs::str() const {
  return "a=" + to_string(a) + " b=" + to_string(b) + " c=" + to_string(c) + " d=" + to_string(d);
}

Rational eval_quartic(const QuarticCoeffs& k, const Rational& x) {
  return (((x + k.a) * x + k.b) * x + k.c) * x + k.d;
}

DepressedQuartic depress(const QuarticCoeffs& k) {
  const Rational a2 = k.a * k.a;
  DepressedQuartic dq;
  dq.p = k.b - Rational(3, 8) * a2;
  dq.q = k.c - k.a / 2 * (k.b - a2 / 4);
  dq.r = k.d - Rational(3, 256) * a2 * a2 + Rational(1, 16) * a2 * k.b - Rational(1, 4) * k.a * k.c;
  return dq;
}

Rational eval_depressed(const DepressedQuartic& dq, const Rational& y) {
  const Rational y2 = y * y;
  return y2 * y2 + dq.p * y2 + dq.q * y + dq.r;
}

UPoly subquartic(const QuarticCoeffs& k) { return UPoly{0, 0, k.b, k.a, 1}; }

double ExtReal::to_double() const {
  switch (kind) {
    case Kind::NegInf: return -std::numeric_limits<double>::infinity();
    case Kind::PosInf: return std::numeric_limits<double>::infinity();
    case Kind::Finite: break;
  }
  return value.to_double();
}

std::string ExtReal::str() const {
  switch (kind) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "+inf";
    case Kind::Finite: break;
  }
  return value.str();
}

int compare(const ExtReal& x, const ExtReal& y) {
  auto rank = [](const ExtReal& e) { return e.kind == ExtReal::Kind::NegInf ? 0 : e.kind == ExtReal::Kind::Finite ? 1 : 2; };
  if (rank(x) != rank(y)) return rank(x) < rank(y) ? -1 : 1;
  if (!x.is_finite()) return 0;
  return compare(x.value, y.value);
}

Interval Interval::open(const ExtReal& lo, const ExtReal& hi, std::string lo_label, std::string hi_label) {
  return {lo, hi, false, false, std::move(lo_label), std::move(hi_label)};
}

Interval Interval::point(const QuadSurd& x, const std::string& label) {
  return {ExtReal::finite(x), ExtReal::finite(x), true, true, label, label};
}

bool Interval::is_point() const { return compare(lo, hi) == 0; }

bool Interval::contains(const QuadSurd& x) const {
  const ExtReal e = ExtReal::finite(x);
  const int l = compare(lo, e), h = compare(e, hi);
  return (l < 0 || (l == 0 && lo_closed)) && (h < 0 || (h == 0 && hi_closed));
}

Interval Interval::mirrored() const {
  auto neg = [](const ExtReal& e) {
    if (e.kind == ExtReal::Kind::NegInf) return ExtReal::pos_inf();
    if (e.kind == ExtReal::Kind::PosInf) return ExtReal::neg_inf();
    return ExtReal::finite(-e.value);
  };
  return {neg(hi), neg(lo), hi_closed, lo_closed, hi_label, lo_label};
}

}  // namespace quartic
