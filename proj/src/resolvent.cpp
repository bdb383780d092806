#include "quartic/resolvent.hpp"

namespace quartic {

namespace {

Rational quarter_sq(const Rational& a) { return a * a / 4; }

// Side of x relative to a pair (lower, upper) of roots of a downward quadratic
// in c with discriminant value disc at x and vertex mid.
void place_pair(int disc_sign, const Rational& x, const Rational& mid, const char* lower, const char* upper,
                Placement& out) {
  if (disc_sign > 0) {
    out.below += 1;
  } else if (disc_sign == 0) {
    if (x == mid) {
      out.ties.push_back(lower);
      out.ties.push_back(upper);
    } else if (x > mid) {
      out.below += 1;
      out.ties.push_back(upper);
    } else {
      out.ties.push_back(lower);
    }
  } else if (x > mid) {
    out.below += 2;
  }
}

}  // namespace

Rational first_discriminant(const Rational& a, const Rational& b, const Rational& c) {
  const Rational A = quarter_sq(a);
  return -432 * c * c - 432 * a * (A - b) * c + 128 * b * b * (Rational(9, 8) * A - b);
}

Rational second_discriminant(const Rational& a, const Rational& b, const Rational& c) {
  return -27 * c * c + (-4 * a * a * a + 18 * a * b) * c + a * a * b * b - 4 * b * b * b;
}

Placement place_in_chain(const Rational& a, const Rational& b, const Rational& x) {
  const Rational A = quarter_sq(a);
  const Rational c0 = a / 2 * (b - A);
  const Rational gamma_mid = a / 3 * (b - Rational(8, 9) * A);
  Placement p;
  if (b <= Rational(3, 2) * A) place_pair(sgn(first_discriminant(a, b, x)), x, c0, "c2", "c1", p);
  if (b <= Rational(4, 3) * A) place_pair(sgn(second_discriminant(a, b, x)), x, gamma_mid, "gamma2", "gamma1", p);
  if (x > c0) p.below += 1;
  if (x == c0) p.ties.push_back("c0");
  return p;
}

ResolventChain resolvent_chain(const QuarticCoeffs& k) {
  const Rational& a = k.a;
  const Rational& b = k.b;
  const Rational A = quarter_sq(a);
  ResolventChain ch;
  ch.c0 = a / 2 * (b - A);
  ch.d0 = (b - A) * (b - A) / 4;

  const Rational kk = Rational(3, 2) * A - b;
  if (kk >= 0) {
    // c1,2 = c0 +- (2k/9) sqrt(6k)
    ch.c1 = QuadSurd(ch.c0, 2 * kk / 9, 6 * kk);
    ch.c2 = QuadSurd(ch.c0, -2 * kk / 9, 6 * kk);
  }
  const Rational m = Rational(4, 3) * A - b;
  if (m >= 0) {
    // gamma1,2 = (a/3)(b - (8/9)A) +- (2m/9) sqrt(3m)
    const Rational mid = a / 3 * (b - Rational(8, 9) * A);
    ch.gamma1 = QuadSurd(mid, 2 * m / 9, 3 * m);
    ch.gamma2 = QuadSurd(mid, -2 * m / 9, 3 * m);
  }

  if (ch.c2) ch.entries.push_back({"c2", *ch.c2});
  if (ch.gamma2) ch.entries.push_back({"gamma2", *ch.gamma2});
  ch.entries.push_back({"c0", QuadSurd(ch.c0)});
  if (ch.gamma1) ch.entries.push_back({"gamma1", *ch.gamma1});
  if (ch.c1) ch.entries.push_back({"c1", *ch.c1});

  Placement pc = place_in_chain(a, b, k.c);
  ch.c_position = pc.below;
  ch.c_ties = std::move(pc.ties);
  Placement pz = place_in_chain(a, b, 0);
  ch.zero_position = pz.below;
  ch.zero_ties = std::move(pz.ties);
  return ch;
}

std::optional<EtaTheta> eta_theta(const QuarticCoeffs& k) {
  const Rational kk = Rational(3, 8) * k.a * k.a - k.b;
  if (kk < 0) return std::nullopt;
  const Rational centre = -k.a / 4;
  EtaTheta et;
  et.eta1 = QuadSurd(centre, Rational(1, 6), 6 * kk);
  et.eta2 = QuadSurd(centre, Rational(-1, 6), 6 * kk);
  // theta_i = -(3/4)a - 2 eta_i
  et.theta1 = QuadSurd(-Rational(3, 4) * k.a) - QuadSurd(2) * et.eta1;
  et.theta2 = QuadSurd(-Rational(3, 4) * k.a) - QuadSurd(2) * et.eta2;
  return et;
}

bool is_quadruple_profile(const QuarticCoeffs& k) {
  return k.b == Rational(3, 8) * k.a * k.a && k.c == k.a * k.a * k.a / 16;
}

std::vector<NamedInterval> stationary_brackets(const QuarticCoeffs& k) {
  const QuadSurd phi(-k.a / 4);
  const Rational c0 = k.a / 2 * (k.b - quarter_sq(k.a));
  const auto inf_lo = ExtReal::neg_inf(), inf_hi = ExtReal::pos_inf();
  if (is_quadruple_profile(k)) return {{"mu1", Interval::point(phi, "phi")}};
  const auto et = eta_theta(k);
  if (!et) {
    if (k.c < c0) return {{"mu1", Interval::open(ExtReal::finite(phi), inf_hi, "phi", "+inf")}};
    if (k.c > c0) return {{"mu1", Interval::open(inf_lo, ExtReal::finite(phi), "-inf", "phi")}};
    return {{"mu1", Interval::point(phi, "phi")}};
  }
  const auto fin = [](const QuadSurd& x) { return ExtReal::finite(x); };
  const int disc = sgn(first_discriminant(k.a, k.b, k.c));
  if (disc > 0) {
    return {{"mu3", Interval::open(fin(et->theta1), fin(et->eta2), "theta1", "eta2")},
            {"mu2", Interval::open(fin(et->eta2), fin(et->eta1), "eta2", "eta1")},
            {"mu1", Interval::open(fin(et->eta1), fin(et->theta2), "eta1", "theta2")}};
  }
  if (disc == 0) {
    // c is c2 (below c0) or c1 (above); the third root sums to -3a/4 with the double one.
    if (k.c < c0) return {{"mu2", Interval::point(et->eta2, "eta2")}, {"mu1", Interval::point(et->theta2, "theta2")}};
    return {{"mu2", Interval::point(et->eta1, "eta1")}, {"mu1", Interval::point(et->theta1, "theta1")}};
  }
  if (k.c < c0) return {{"mu1", Interval::open(fin(et->theta2), inf_hi, "theta2", "+inf")}};
  return {{"mu1", Interval::open(inf_lo, fin(et->theta1), "-inf", "theta1")}};
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::Rho: return "rho";
    case Regime::Sigma: return "sigma";
    case Regime::Tau: return "tau";
    case Regime::Phi: return "phi";
  }
  return "?";
}

Regime regime_of(const Rational& a, const Rational& b) {
  const Rational A = quarter_sq(a);
  if (b <= A) return Regime::Rho;
  if (b <= Rational(9, 8) * A) return Regime::Sigma;
  if (b <= Rational(3, 2) * A) return Regime::Tau;
  return Regime::Phi;
}

MarkerSet markers_for_regime(const QuarticCoeffs& k) {
  const Rational& a = k.a;
  const Rational& b = k.b;
  const Rational& c = k.c;
  const Rational A = quarter_sq(a);
  const UPoly S = subquartic(k);
  const UPoly S2 = S.derivative().derivative();
  MarkerSet ms;
  ms.regime = regime_of(a, b);

  // High/low pair: the marker with the larger sub-quartic value is "H", except
  // for the stationary pair where H is the local maximum.
  auto high_low = [&](const QuadSurd& r1, const QuadSurd& r2, bool by_curvature, const std::string& stem) {
    const QuadSurd v1 = evaluate(S, r1), v2 = evaluate(S, r2);
    bool first_high;
    if (by_curvature) {
      first_high = surd_sign(evaluate(S2, r1)) < 0 || (surd_sign(evaluate(S2, r2)) >= 0 && compare(v1, v2) >= 0);
    } else {
      first_high = compare(v1, v2) >= 0;
    }
    const QuadSurd& xH = first_high ? r1 : r2;
    const QuadSurd& xh = first_high ? r2 : r1;
    ms.H = first_high ? v1 : v2;
    ms.h = first_high ? v2 : v1;
    ms.points = {{stem + "_H", xH}, {stem + "_h", xh}};
    ms.ordinates = {{"c*" + stem + "_H+H", QuadSurd(c) * xH + *ms.H}, {"c*" + stem + "_h+h", QuadSurd(c) * xh + *ms.h}};
  };

  switch (ms.regime) {
    case Regime::Rho: {
      const QuadSurd r1 = quadratic_root(a, b, true), r2 = quadratic_root(a, b, false);
      ms.points = {{"rho1", r1}, {"rho2", r2}};
      ms.ordinates = {{"c*rho1", QuadSurd(c) * r1}, {"c*rho2", QuadSurd(c) * r2}};
      if (b < 0) {
        const Rational s = 9 * a * a - 32 * b;
        ms.minima_gap = QuadSurd(0, -a * s / 256, s);
      }
      break;
    }
    case Regime::Sigma:
      // 4x^2 + 3a x + 2b = 0
      high_low(quadratic_root(Rational(3, 4) * a, b / 2, true), quadratic_root(Rational(3, 4) * a, b / 2, false), true,
               "sigma");
      ms.c_hat = -a / 2 * (Rational(9, 8) * A - b);
      break;
    case Regime::Tau:
      // 6x^2 + 3a x + b = 0
      high_low(quadratic_root(a / 2, b / 6, true), quadratic_root(a / 2, b / 6, false), false, "tau");
      break;
    case Regime::Phi: {
      const Rational phi = -a / 4;
      ms.points = {{"phi", QuadSurd(phi)}};
      ms.t = -a * c / 4 + a * a / 16 * (b - Rational(3, 4) * A);
      ms.T = *ms.t + a * c / 4;
      ms.zeta = a / 4 * (b - Rational(3, 4) * A);
      ms.ordinates = {{"t", QuadSurd(*ms.t)}};
      if (a * c < 0) ms.ordinates.push_back({"T", QuadSurd(*ms.T)});
      break;
    }
  }
  return ms;
}

DoubleTangent double_tangent(const QuarticCoeffs& k) {
  const Rational A = quarter_sq(k.a);
  DoubleTangent dt;
  dt.c0 = k.a / 2 * (k.b - A);
  dt.d0 = (k.b - A) * (k.b - A) / 4;
  // alpha, beta solve x^2 + (a/2) x + (b/2 - a^2/8) = 0
  const Rational p = k.a / 2, q = k.b / 2 - k.a * k.a / 8;
  if (p * p - 4 * q >= 0) {
    dt.alpha = quadratic_root(p, q, true);
    dt.beta = quadratic_root(p, q, false);
  }
  return dt;
}

}  // namespace quartic
