#include "quartic/quad_surd.hpp"

#include <stdexcept>

namespace quartic {

namespace {

bool rational_square_root(const Rational& x, Rational& root) {
  if (x < 0) return false;
  if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t())) return false;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), x.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), x.get_den_mpz_t());
  root = Rational(n, d);
  root.canonicalize();
  return true;
}

// Rewrites y over x's radicand when sqrt(y.s / x.s) is rational.
bool align(const QuadSurd& x, const QuadSurd& y, Rational& y_v) {
  if (y.is_rational()) {
    y_v = 0;
    return true;
  }
  if (x.is_rational()) return false;
  if (x.s() == y.s()) {
    y_v = y.v();
    return true;
  }
  Rational k;
  if (!rational_square_root(y.s() / x.s(), k)) return false;
  y_v = y.v() * k;
  return true;
}

// Sign of p + q*sqrt(s) + r*sqrt(t).
int sign_two_surds(const Rational& p, const Rational& q, const Rational& s, const Rational& r, const Rational& t) {
  const int sa = surd_sign(p, q, s);
  const int sb = sgn(r);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger square wins.
  const int d = surd_sign(p * p + q * q * s - r * r * t, 2 * p * q, s);
  if (d > 0) return sa;
  if (d < 0) return sb;
  return 0;
}

}  // namespace

QuadSurd::QuadSurd(const Rational& u) : u_(u), v_(0), s_(0) {}

QuadSurd::QuadSurd(const Rational& u, const Rational& v, const Rational& s) : u_(u), v_(v), s_(s) {
  if (s_ < 0) throw std::domain_error("negative radicand");
  Rational root;
  if (v_ == 0 || s_ == 0) {
    v_ = 0;
    s_ = 0;
  } else if (rational_square_root(s_, root)) {
    u_ += v_ * root;
    v_ = 0;
    s_ = 0;
  }
}

QuadSurd operator+(const QuadSurd& x, const QuadSurd& y) {
  if (x.is_rational()) return QuadSurd(x.u_ + y.u_, y.v_, y.s_);
  Rational yv;
  if (!align(x, y, yv)) throw std::domain_error("surds with unrelated radicands");
  return QuadSurd(x.u_ + y.u_, x.v_ + yv, x.s_);
}

QuadSurd operator-(const QuadSurd& x, const QuadSurd& y) { return x + (-y); }

QuadSurd operator*(const QuadSurd& x, const QuadSurd& y) {
  if (x.is_rational()) return QuadSurd(x.u_ * y.u_, x.u_ * y.v_, y.s_);
  Rational yv;
  if (!align(x, y, yv)) throw std::domain_error("surds with unrelated radicands");
  return QuadSurd(x.u_ * y.u_ + x.v_ * yv * x.s_, x.u_ * yv + x.v_ * y.u_, x.s_);
}

double QuadSurd::to_double() const {
  if (is_rational()) return u_.get_d();
  mpf_class sq(s_, 256), u(u_, 256), v(v_, 256);
  sq = sqrt(sq);
  mpf_class r(u + v * sq, 256);
  return r.get_d();
}

std::pair<Rational, Rational> QuadSurd::bracket(const mpz_class& scale) const {
  if (is_rational()) return {u_, u_};
  const mpz_class fine = scale * (ceil_of(abs(v_)).get_num() + 1);
  const Rational r = sqrt_floor(s_, fine);
  const Rational a = u_ + v_ * r;
  const Rational b = u_ + v_ * (r + Rational(1, fine));
  return v_ > 0 ? std::pair{a, b} : std::pair{b, a};
}

std::string QuadSurd::str() const {
  if (is_rational()) return to_string(u_);
  std::string out = u_ == 0 ? "" : to_string(u_);
  if (v_ > 0 && !out.empty()) out += "+";
  if (v_ == -1) out += "-";
  else if (v_ != 1) out += to_string(v_) + "*";
  return out + "sqrt(" + to_string(s_) + ")";
}

int surd_sign(const Rational& u, const Rational& v, const Rational& s) {
  if (s < 0) throw std::domain_error("negative radicand");
  const int su = sgn(u);
  const int sv = s == 0 ? 0 : sgn(v);
  if (sv == 0) return su;
  if (su == 0 || su == sv) return sv;
  const Rational d = u * u - v * v * s;
  if (d > 0) return su;
  if (d < 0) return sv;
  return 0;
}

int surd_sign(const QuadSurd& x) { return surd_sign(x.u(), x.v(), x.s()); }

int compare(const QuadSurd& x, const QuadSurd& y) {
  const Rational p = x.u() - y.u();
  if (y.is_rational()) return surd_sign(p, x.v(), x.s());
  if (x.is_rational()) return surd_sign(p, -y.v(), y.s());
  if (x.s() == y.s()) return surd_sign(p, x.v() - y.v(), x.s());
  return sign_two_surds(p, x.v(), x.s(), -y.v(), y.s());
}

QuadSurd quadratic_root(const Rational& b, const Rational& c, bool plus_root) {
  const Rational disc = b * b - 4 * c;
  if (disc < 0) throw std::domain_error("quadratic has no real roots");
  return QuadSurd(-b / 2, plus_root ? Rational(1, 2) : Rational(-1, 2), disc);
}

QuadSurd evaluate(const UPoly& p, const QuadSurd& x) {
  QuadSurd acc;
  for (int k = p.degree(); k >= 0; --k) acc = acc * x + QuadSurd(p.coeff(k));
  return acc;
}

UPoly minimal_poly(const QuadSurd& x) {
  if (x.is_rational()) return UPoly::linear_root(x.u());
  return UPoly{x.u() * x.u() - x.v() * x.v() * x.s(), -2 * x.u(), 1};
}

}  // namespace quartic
