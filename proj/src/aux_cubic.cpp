#include "quartic/aux_cubic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace quartic {

namespace {

// Moves a rational endpoint of a surd toward the surd until the monotone cubic
// q takes the wanted sign there. take_hi selects the bracket end to the right.
Rational endpoint_with_sign(const UPoly& q, const QuadSurd& e, bool take_hi, int wanted) {
  mpz_class scale = 1;
  scale <<= 16;
  for (;;) {
    const auto [lo, hi] = e.bracket(scale);
    const Rational& r = take_hi ? hi : lo;
    if (q.sign_at(r) == wanted) return r;
    scale <<= 16;
  }
}

// Shrinks (lo, hi) around a seed when the seed's small neighbourhood shows a
// sign change; otherwise leaves the interval for bisection.
AlgebraicReal tighten(const UPoly& q, const Rational& lo, const Rational& hi, const std::vector<long double>& seeds) {
  AlgebraicReal root = AlgebraicReal::isolated(q, lo, hi);
  const double lo_d = lo.get_d(), hi_d = hi.get_d();
  for (long double s : seeds) {
    const double x = static_cast<double>(s);
    if (!(x > lo_d && x < hi_d) || !std::isfinite(x)) continue;
    const double eps = std::ldexp(1.0, -33) * std::max(1.0, std::fabs(x));
    Rational l = from_double(x - eps), h = from_double(x + eps);
    if (l < lo) l = lo;
    if (h > hi) h = hi;
    if (!(l < h)) continue;
    const int sl = q.sign_at(l), sh = q.sign_at(h);
    if (sl == 0) return AlgebraicReal::exact(l);
    if (sh == 0) return AlgebraicReal::exact(h);
    if (sl != sh) return AlgebraicReal::isolated(q, l, h);
  }
  return root;
}

std::vector<CertifiedRoot> isolate_squarefree(const UPoly& q, const Rational& max_width) {
  // q is monic, cubic and squarefree.
  Rational bound = 0;
  for (int k = 0; k < 3; ++k) bound = std::max(bound, Rational(abs(q.coeff(k))));
  bound += 1;

  std::vector<std::pair<Rational, Rational>> spans;
  const Rational qb = 2 * q.coeff(2) / 3, qc = q.coeff(1) / 3;  // q'/3 = x^2 + qb x + qc
  if (qb * qb - 4 * qc <= 0) {
    spans.emplace_back(-bound, bound);
  } else {
    const QuadSurd e1 = quadratic_root(qb, qc, false), e2 = quadratic_root(qb, qc, true);
    const int s1 = surd_sign(evaluate(q, e1)), s2 = surd_sign(evaluate(q, e2));
    if (s1 > 0) spans.emplace_back(-bound, endpoint_with_sign(q, e1, false, 1));
    if (s1 > 0 && s2 < 0) spans.emplace_back(endpoint_with_sign(q, e1, true, 1), endpoint_with_sign(q, e2, false, -1));
    if (s2 < 0) spans.emplace_back(endpoint_with_sign(q, e2, true, -1), bound);
  }

  const auto seeds = approximate_cubic_roots(1.0L, q.coeff(2).get_d(), q.coeff(1).get_d(), q.coeff(0).get_d());
  std::vector<CertifiedRoot> out;
  for (const auto& [lo, hi] : spans) {
    CertifiedRoot r{tighten(q, lo, hi, seeds), 1};
    r.value.snap_rational();
    r.value.refine_to(max_width);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

CubicDiscriminants cubic_discriminants(const QuarticCoeffs& k) {
  return {first_discriminant(k.a, k.b, k.c), second_discriminant(k.a, k.b, k.c)};
}

Rational default_root_width() { return Rational(1, 1000000000); }

std::vector<long double> approximate_cubic_roots(long double p3, long double p2, long double p1, long double p0) {
  const long double A = p2 / p3, B = p1 / p3, C = p0 / p3;
  const long double p = B - A * A / 3;
  const long double q = 2 * A * A * A / 27 - A * B / 3 + C;
  const long double shift = -A / 3;
  std::vector<long double> roots;
  const long double disc = -(4 * p * p * p + 27 * q * q);
  if (disc > 0 && p < 0) {
    const long double m = 2 * std::sqrt(-p / 3);
    long double arg = 3 * q / (p * m);
    arg = std::clamp(arg, -1.0L, 1.0L);
    const long double theta = std::acos(arg) / 3;
    for (int k = 0; k < 3; ++k) roots.push_back(m * std::cos(theta - 2 * std::numbers::pi_v<long double> * k / 3) + shift);
  } else {
    const long double h = std::sqrt(std::max(0.0L, q * q / 4 + p * p * p / 27));
    roots.push_back(std::cbrt(-q / 2 + h) + std::cbrt(-q / 2 - h) + shift);
  }
  // A couple of Newton steps tidy up cancellation in the closed forms.
  for (auto& x : roots) {
    for (int it = 0; it < 2; ++it) {
      const long double f = ((p3 * x + p2) * x + p1) * x + p0;
      const long double df = (3 * p3 * x + 2 * p2) * x + p1;
      if (df != 0) x -= f / df;
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<CertifiedRoot> solve_cubic_real(const Rational& p3, const Rational& p2, const Rational& p1,
                                            const Rational& p0, const Rational& max_width) {
  if (p3 == 0) throw std::invalid_argument("leading coefficient of cubic is zero");
  const UPoly P = UPoly{p0, p1, p2, p3}.monic();
  const UPoly g = gcd(P, P.derivative());
  if (g.degree() == 2) return {{AlgebraicReal::exact(-P.coeff(2) / 3), 3}};
  if (g.degree() == 1) {
    const Rational r = -g.coeff(0);
    const UPoly rest = P / (g * g);
    const Rational s = -rest.coeff(0);
    std::vector<CertifiedRoot> out{{AlgebraicReal::exact(r), 2}, {AlgebraicReal::exact(s), 1}};
    if (s < r) std::swap(out[0], out[1]);
    return out;
  }
  return isolate_squarefree(P, max_width);
}

const char* stationary_kind_name(StationaryKind k) {
  switch (k) {
    case StationaryKind::SingleMin: return "SINGLE_MIN";
    case StationaryKind::MinMaxMin: return "MIN_MAX_MIN";
    case StationaryKind::SaddleMinLeft: return "SADDLE_MIN_LEFT";
    case StationaryKind::SaddleMinRight: return "SADDLE_MIN_RIGHT";
    case StationaryKind::Quadruple: return "QUADRUPLE";
  }
  return "?";
}

const char* point_kind_name(PointKind k) {
  switch (k) {
    case PointKind::Min: return "min";
    case PointKind::Max: return "max";
    case PointKind::Saddle: return "saddle";
  }
  return "?";
}

const StationaryPoint* StationaryProfile::find(const std::string& name) const {
  for (const auto& p : mu)
    if (p.name == name) return &p;
  return nullptr;
}

StationaryProfile stationary_points(const QuarticCoeffs& k) {
  StationaryProfile prof;
  prof.brackets = stationary_brackets(k);
  auto roots = solve_cubic_real(4, 3 * k.a, 2 * k.b, k.c);
  const UPoly second = k.poly().derivative().derivative();

  auto classify_point = [&](std::string name, CertifiedRoot& r) {
    StationaryPoint p{std::move(name), r.value, PointKind::Min, r.multiplicity};
    if (r.multiplicity == 2) p.kind = PointKind::Saddle;
    else if (r.multiplicity == 1) p.kind = p.x.sign_of(second) > 0 ? PointKind::Min : PointKind::Max;
    return p;
  };

  if (roots.size() == 1) {
    prof.kind = roots[0].multiplicity == 3 ? StationaryKind::Quadruple : StationaryKind::SingleMin;
    prof.mu.push_back(classify_point("mu1", roots[0]));
  } else if (roots.size() == 2) {
    const bool saddle_first = roots[0].multiplicity == 2;
    CertifiedRoot& saddle = saddle_first ? roots[0] : roots[1];
    CertifiedRoot& minimum = saddle_first ? roots[1] : roots[0];
    prof.kind = saddle_first ? StationaryKind::SaddleMinLeft : StationaryKind::SaddleMinRight;
    prof.mu.push_back(classify_point("mu1", minimum));
    prof.mu.push_back(classify_point("mu2", saddle));
  } else {
    prof.kind = StationaryKind::MinMaxMin;
    prof.mu.push_back(classify_point("mu1", roots[2]));
    prof.mu.push_back(classify_point("mu2", roots[1]));
    prof.mu.push_back(classify_point("mu3", roots[0]));
  }
  return prof;
}

LambdaSet lambda_points(const QuarticCoeffs& k) {
  LambdaSet set;
  set.delta2_sign = sgn(second_discriminant(k.a, k.b, k.c));
  auto roots = solve_cubic_real(1, k.a, k.b, k.c);
  // Name by position in the multiplicity-expanded order lambda2 <= lambda0 <= lambda1,
  // taking the last slot a repeated root occupies.
  static const char* slots[] = {"lambda2", "lambda0", "lambda1"};
  int taken = 3;
  for (const auto& r : roots) taken -= r.multiplicity;
  for (auto& r : roots) {
    taken += r.multiplicity;
    set.lambdas.push_back({slots[taken - 1], r.value, r.multiplicity});
  }
  return set;
}

}  // namespace quartic
