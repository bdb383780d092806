#pragma once

#include "quartic/algebraic.hpp"
#include "quartic/core.hpp"
#include "quartic/resolvent.hpp"

#include <string>
#include <vector>

namespace quartic {

struct CubicDiscriminants {
  Rational delta1;  ///< of the derivative 4x^3 + 3a x^2 + 2b x + c
  Rational delta2;  ///< of x^3 + a x^2 + b x + c
};

CubicDiscriminants cubic_discriminants(const QuarticCoeffs& coeffs);

struct CertifiedRoot {
  AlgebraicReal value;
  int multiplicity = 1;
};

/// Default isolation width for cubic roots.
Rational default_root_width();

/// Real roots of p3 x^3 + p2 x^2 + p1 x + p0 in increasing order. Each root is
/// either exact (rational) or held in an isolating bracket no wider than
/// max_width. Throws std::invalid_argument when p3 = 0.
std::vector<CertifiedRoot> solve_cubic_real(const Rational& p3, const Rational& p2, const Rational& p1,
                                            const Rational& p0, const Rational& max_width = default_root_width());

/// Floating estimates of the real roots (trigonometric form for three real
/// roots, Cardano otherwise). Advisory only: used to seed brackets.
std::vector<long double> approximate_cubic_roots(long double p3, long double p2, long double p1, long double p0);

enum class StationaryKind { SingleMin, MinMaxMin, SaddleMinLeft, SaddleMinRight, Quadruple };
enum class PointKind { Min, Max, Saddle };

const char* stationary_kind_name(StationaryKind k);
const char* point_kind_name(PointKind k);

struct StationaryPoint {
  std::string name;  ///< mu1 (a minimum), mu2, mu3
  AlgebraicReal x;
  PointKind kind = PointKind::Min;
  int multiplicity = 1;  ///< as a root of the derivative
};

struct StationaryProfile {
  StationaryKind kind = StationaryKind::SingleMin;
  /// Ordered by name: mu1, mu2, mu3.
  std::vector<StationaryPoint> mu;
  std::vector<NamedInterval> brackets;

  const StationaryPoint* find(const std::string& name) const;
};

StationaryProfile stationary_points(const QuarticCoeffs& coeffs);

struct LambdaPoint {
  std::string name;  ///< lambda1 is the largest, then lambda0, lambda2
  AlgebraicReal x;
  int multiplicity = 1;
};

/// Roots of x^3 + a x^2 + b x + c, where the quartic takes the value d.
struct LambdaSet {
  std::vector<LambdaPoint> lambdas;  ///< increasing
  int delta2_sign = 0;
};

LambdaSet lambda_points(const QuarticCoeffs& coeffs);

}  // namespace quartic
