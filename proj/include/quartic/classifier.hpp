#pragma once

#include "quartic/aux_cubic.hpp"
#include "quartic/core.hpp"
#include "quartic/resolvent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace quartic {

/// A root of x^2 + (a + 2mu) x + (b + 2a mu + 3mu^2): where the horizontal
/// line through the quartic's value at mu meets the quartic again.
struct XiPoint {
  std::string name;  ///< xi<i>_1 is the larger, xi<i>_2 the smaller
  Rational lo, hi;   ///< enclosure; lo == hi when exact
  std::optional<QuadSurd> exact;
  double approx = 0;
};

struct SpecialTangent {
  std::string mu_name;
  /// delta = -mu^4 - a mu^3 - b mu^2 - c mu, enclosed in [delta_lo, delta_hi].
  Rational delta_lo, delta_hi;
  double minus_delta = 0;
  /// Sign of quartic(mu) = d - delta, i.e. of (-delta) - (-d).
  int value_sign = 0;
  std::vector<XiPoint> xi;
};

struct SpecialTangents {
  std::vector<SpecialTangent> tangents;  ///< in the order of the profile's mu list
};

SpecialTangents special_tangents(const QuarticCoeffs& coeffs, const StationaryProfile& profile);

enum class Tier { Cubic, Quadratic };

struct RootEntry {
  /// Rational enclosure (a point for exact roots) with landmark names as labels.
  Interval interval;
  /// Approximate landmark values at the ends; infinite when unbounded.
  double lo_value = 0, hi_value = 0;
  int sign = 0;
  int multiplicity = 1;
};

struct RootReport {
  Tier tier = Tier::Cubic;
  int count = 0;  ///< cubic tier: exact count with multiplicity
  std::vector<int> possible_counts;
  std::vector<RootEntry> roots;            ///< guaranteed roots
  std::vector<RootEntry> ambiguous_pairs;  ///< quadratic tier: zero or two roots each
};

RootReport classify_cubic_tier(const QuarticCoeffs& coeffs);
RootReport classify_quadratic_tier(const QuarticCoeffs& coeffs);

/// Root count implied by the quartic's signs at its stationary points, taken
/// in increasing order of abscissa. A monotone piece between two stationary
/// points (or an infinite end, where the quartic is positive) holds a root iff
/// its end signs are strictly opposite; a zero value contributes the root's
/// multiplicity (2 at a min or max, 3 at a saddle, 4 for the quadruple case).
int count_from_stationary_signs(const std::vector<PointKind>& kinds, const std::vector<int>& signs, bool quadruple);

struct CaseLabel {
  int row = 1;
  int column = 1;
  int cubic_subcase = 1;
  int quadratic_subcase = 1;
  std::vector<std::string> ties;

  /// Row.column with the quadratic subcase, e.g. "1.11(ii)".
  std::string str() const;
  std::string cubic_str() const;
};

std::string roman(int n);

CaseLabel case_label(const QuarticCoeffs& coeffs);

std::vector<NamedInterval> stationary_isolation(const QuarticCoeffs& coeffs);

struct Classification {
  QuarticCoeffs coeffs;
  CaseLabel label;
  RootReport cubic;
  RootReport quadratic;
  StationaryProfile stationary;
  SpecialTangents tangents;
  LambdaSet lambdas;
  ResolventChain chain;
  MarkerSet markers;
  DoubleTangent double_tangent;
  CubicDiscriminants discriminants;
};

Classification classify(const QuarticCoeffs& coeffs);

}  // namespace quartic
