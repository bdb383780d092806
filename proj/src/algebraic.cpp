#include "quartic/algebraic.hpp"

#include <stdexcept>

namespace quartic {

AlgebraicReal AlgebraicReal::exact(const Rational& r) {
  AlgebraicReal x;
  x.poly_ = UPoly::linear_root(r);
  x.lo_ = r;
  x.hi_ = r;
  return x;
}

AlgebraicReal AlgebraicReal::isolated(const UPoly& poly, const Rational& lo, const Rational& hi) {
  const int sl = poly.sign_at(lo);
  const int sh = poly.sign_at(hi);
  if (!(lo < hi) || sl == 0 || sh == 0 || sl == sh) throw std::invalid_argument("interval does not isolate a simple sign change");
  AlgebraicReal x;
  x.poly_ = poly;
  x.lo_ = lo;
  x.hi_ = hi;
  x.sign_lo_ = sl;
  return x;
}

AlgebraicReal AlgebraicReal::from_surd(const QuadSurd& s) {
  if (s.is_rational()) return exact(s.u());
  const UPoly p = minimal_poly(s);
  mpz_class scale = 1;
  scale <<= 24;
  for (;;) {
    const auto [lo, hi] = s.bracket(scale);
    // A sign change means one root of the quadratic inside, and the bracket holds s.
    if (p.sign_at(lo) * p.sign_at(hi) < 0) return isolated(p, lo, hi);
    scale <<= 24;
  }
}

void AlgebraicReal::refine() {
  if (is_rational()) return;
  const Rational mid = (lo_ + hi_) / 2;
  const int sm = poly_.sign_at(mid);
  if (sm == 0) {
    *this = exact(mid);
  } else if (sm == sign_lo_) {
    lo_ = mid;
  } else {
    hi_ = mid;
  }
}

void AlgebraicReal::refine_to(const Rational& max_width) {
  while (width() > max_width) refine();
}

bool AlgebraicReal::snap_rational() {
  if (is_rational()) return true;
  mpz_class den = 1;
  for (const auto& c : poly_.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  const Rational scaled_lead = poly_.lead() * den;
  const mpz_class L = abs(scaled_lead.get_num());
  refine_to(Rational(1, 2 * L));
  if (is_rational()) return true;
  const Rational lo_scaled = lo_ * L;
  const Rational n = floor_of(lo_scaled) + 1;
  const Rational hi_scaled = hi_ * L;
  if (n < hi_scaled) {
    const Rational candidate = n / L;
    if (poly_.sign_at(candidate) == 0) *this = exact(candidate);
  }
  return is_rational();
}

int AlgebraicReal::sign_of(const UPoly& q) {
  if (is_rational()) return q.sign_at(lo_);
  const UPoly r = q % poly_;
  if (r.degree() <= 0) return sgn(r.coeff(0));
  const UPoly g = gcd(poly_, r);
  if (g.degree() >= 1 && g.sign_at(lo_) * g.sign_at(hi_) < 0) return 0;
  for (;;) {
    const auto [vlo, vhi] = r.eval_range(lo_, hi_);
    if (vlo > 0) return 1;
    if (vhi < 0) return -1;
    refine();
    if (is_rational()) return r.sign_at(lo_);
  }
}

double AlgebraicReal::approx() const {
  if (is_rational()) return lo_.get_d();
  AlgebraicReal copy = *this;
  Rational scale = abs(lo_) + abs(hi_) + 1;
  copy.refine_to(scale / Rational(mpz_class(1) << 64));
  const Rational mid = (copy.lo_ + copy.hi_) / 2;
  return mid.get_d();
}

int compare(const AlgebraicReal& x, const Rational& r) {
  if (x.is_rational()) return sgn(x.lo() - r);
  if (r <= x.lo()) return 1;
  if (r >= x.hi()) return -1;
  const int sr = x.poly().sign_at(r);
  if (sr == 0) return 0;
  // The root lies on the side of r where the sign still differs from sign(r).
  return sr == x.poly().sign_at(x.lo()) ? 1 : -1;
}

int compare(AlgebraicReal& x, AlgebraicReal& y) {
  for (;;) {
    if (x.is_rational()) return -compare(y, x.lo());
    if (y.is_rational()) return compare(x, y.lo());
    if (x.hi() <= y.lo()) return -1;
    if (y.hi() <= x.lo()) return 1;
    const Rational lo = x.lo() > y.lo() ? x.lo() : y.lo();
    const Rational hi = x.hi() < y.hi() ? x.hi() : y.hi();
    const UPoly g = gcd(x.poly(), y.poly());
    if (g.degree() >= 1 && g.sign_at(lo) * g.sign_at(hi) < 0) return 0;
    x.refine();
    y.refine();
  }
}

int compare_surd(AlgebraicReal& x, const QuadSurd& y) {
  if (y.is_rational()) return compare(x, y.u());
  AlgebraicReal ya = AlgebraicReal::from_surd(y);
  return compare(x, ya);
}

}  // namespace quartic
