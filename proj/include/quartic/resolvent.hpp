#pragma once

#include "quartic/core.hpp"
#include "quartic/quad_surd.hpp"

#include <optional>
#include <string>
#include <vector>

namespace quartic {

struct NamedSurd {
  std::string name;
  QuadSurd value;
};

/// Discriminant of 4x^3 + 3a x^2 + 2b x + c, read as a quadratic in c.
Rational first_discriminant(const Rational& a, const Rational& b, const Rational& c);
/// Discriminant of x^3 + a x^2 + b x + c, read as a quadratic in c.
Rational second_discriminant(const Rational& a, const Rational& b, const Rational& c);

/// Values of c where the derivative cubic or the cubic x^3+ax^2+bx+c gains a
/// double root, the double tangent (c0, d0), and where c and 0 fall among them.
struct ResolventChain {
  std::optional<QuadSurd> c2, gamma2, gamma1, c1;
  Rational c0, d0;

  /// Present values in chain order c2, gamma2, c0, gamma1, c1.
  std::vector<NamedSurd> entries;

  /// Count of entries strictly below c (resp. 0), and names of entries equal to it.
  int c_position = 0;
  std::vector<std::string> c_ties;
  int zero_position = 0;
  std::vector<std::string> zero_ties;
};

struct Placement {
  int below = 0;
  std::vector<std::string> ties;
};

/// Places x among the chain values of (a, b) using only discriminant signs and
/// rational comparisons.
Placement place_in_chain(const Rational& a, const Rational& b, const Rational& x);

ResolventChain resolvent_chain(const QuarticCoeffs& coeffs);

/// Roots of 6x^2 + 3a x + b = 0 (inflection points of the quartic) and the
/// points theta where the tangent at eta meets the quartic again.
struct EtaTheta {
  QuadSurd eta1, eta2, theta1, theta2;
};

/// Absent when b > (3/8) a^2.
std::optional<EtaTheta> eta_theta(const QuarticCoeffs& coeffs);

struct NamedInterval {
  std::string name;
  Interval interval;
};

/// Where the stationary points lie relative to eta, theta and -a/4, decided
/// from the sign of the first discriminant and c against c0. Names follow the
/// stationary profile: mu1 is always a minimum.
std::vector<NamedInterval> stationary_brackets(const QuarticCoeffs& coeffs);

/// b = (3/8) a^2 and c = a^3 / 16: the derivative is 4 (x + a/4)^3.
bool is_quadruple_profile(const QuarticCoeffs& coeffs);

enum class Regime { Rho, Sigma, Tau, Phi };

const char* regime_name(Regime r);
Regime regime_of(const Rational& a, const Rational& b);

/// Marker points of the sub-quartic used by the quadratic-only analysis and the
/// ordinate intercepts of the separator lines (slope -c) through them.
struct MarkerSet {
  Regime regime = Regime::Rho;
  std::vector<NamedSurd> points;
  std::vector<NamedSurd> ordinates;
  /// Sub-quartic values at the high and low marker (Sigma and Tau).
  std::optional<QuadSurd> H, h;
  std::optional<Rational> t, T, zeta, c_hat;
  std::optional<QuadSurd> minima_gap;
};

MarkerSet markers_for_regime(const QuarticCoeffs& coeffs);

/// The line -c0 x - d0 is tangent to the sub-quartic at alpha and beta.
struct DoubleTangent {
  Rational c0, d0;
  std::optional<QuadSurd> alpha, beta;
};

DoubleTangent double_tangent(const QuarticCoeffs& coeffs);

}  // namespace quartic
