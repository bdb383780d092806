#include "quartic/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace quartic {

UPoly::UPoly(std::initializer_list<Rational> low_to_high) : c_(low_to_high) { trim(); }

UPoly::UPoly(std::vector<Rational> low_to_high) : c_(std::move(low_to_high)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly{c}; }

UPoly UPoly::linear_root(const Rational& r) { return UPoly{-r, 1}; }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return c_[static_cast<size_t>(k)];
}

Rational UPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::pair<Rational, Rational> UPoly::eval_range(const Rational& lo, const Rational& hi) const {
  Rational acc_lo = 0, acc_hi = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const Rational p1 = acc_lo * lo, p2 = acc_lo * hi, p3 = acc_hi * lo, p4 = acc_hi * hi;
    acc_lo = std::min({p1, p2, p3, p4}) + *it;
    acc_hi = std::max({p1, p2, p3, p4}) + *it;
  }
  return {acc_lo, acc_hi};
}

UPoly UPoly::derivative() const {
  std::vector<Rational> d;
  for (size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long>(k));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  const Rational inv = 1 / lead();
  return inv * *this;
}

UPoly UPoly::operator-() const {
  std::vector<Rational> n(c_.size());
  for (size_t k = 0; k < c_.size(); ++k) n[k] = -c_[k];
  return UPoly(std::move(n));
}

UPoly operator+(const UPoly& p, const UPoly& q) {
  std::vector<Rational> s(std::max(p.c_.size(), q.c_.size()));
  for (size_t k = 0; k < s.size(); ++k) s[k] = p.coeff(static_cast<int>(k)) + q.coeff(static_cast<int>(k));
  return UPoly(std::move(s));
}

UPoly operator-(const UPoly& p, const UPoly& q) { return p + (-q); }

UPoly operator*(const UPoly& p, const UPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Rational> r(p.c_.size() + q.c_.size() - 1);
  for (size_t i = 0; i < p.c_.size(); ++i)
    for (size_t j = 0; j < q.c_.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
  return UPoly(std::move(r));
}

UPoly operator*(const Rational& k, const UPoly& p) {
  std::vector<Rational> r(p.c_);
  for (auto& x : r) x *= k;
  return UPoly(std::move(r));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem(c_);
  const int dd = divisor.degree();
  if (degree() < dd) return {UPoly{}, *this};
  std::vector<Rational> quo(static_cast<size_t>(degree() - dd + 1));
  for (int k = degree(); k >= dd; --k) {
    const Rational t = rem[static_cast<size_t>(k)] / divisor.lead();
    quo[static_cast<size_t>(k - dd)] = t;
    if (t == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<size_t>(k - dd + j)] -= t * divisor.c_[static_cast<size_t>(j)];
  }
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly UPoly::shifted(const Rational& h) const {
  // Horner in polynomial form: p(x+h) = (...(c_n (x+h) + c_{n-1})(x+h) ...)
  UPoly acc;
  const UPoly xh{h, 1};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * xh + UPoly{*it};
  return acc;
}

UPoly UPoly::reflected() const {
  std::vector<Rational> r(c_);
  for (size_t k = 1; k < r.size(); k += 2) r[k] = -r[k];
  return UPoly(std::move(r));
}

std::string UPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& a = c_[static_cast<size_t>(k)];
    if (a == 0) continue;
    if (!out.empty()) out += a > 0 ? " + " : " - ";
    else if (a < 0) out += "-";
    const Rational m = abs(a);
    if (m != 1 || k == 0) out += to_string(m);
    if (k >= 1) out += (m != 1 ? "*x" : "x");
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

UPoly gcd(UPoly p, UPoly q) {
  while (!q.is_zero()) {
    UPoly r = p % q;
    p = std::move(q);
    q = std::move(r);
  }
  return p.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p.monic();
  return (p / gcd(p, p.derivative())).monic();
}

}  // namespace quartic
