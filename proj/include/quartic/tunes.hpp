#pragma once

#include "quartic/classifier.hpp"
#include "quartic/core.hpp"

#include <string>
#include <vector>

namespace quartic {

/// One landmark of the sub-quartic, placed on the separator line (slope -c)
/// through it. Staves are ranked by ordinate intercept, lowest first.
struct Note {
  int stave = 0;
  std::string landmark;
  double x = 0;
  Rational ratio;  ///< (3/2)^stave folded into [1, 2)
  double frequency = 0;
};

struct Tune {
  std::vector<Note> notes;  ///< by increasing abscissa
  int staves = 0;

  /// One line per note: stave=<k> landmark=<name> x=<x> ratio=<p>/<q> freq=<hz>
  std::string text() const;
};

constexpr double kBaseFrequency = 220.0;

/// (3/2)^k with octaves removed.
Rational pythagorean_ratio(int k);

/// Cubic tier: staves are the tangent lines -cx - delta_i and the line -cx
/// through the origin; notes are the mu, lambda, xi and 0. Quadratic tier:
/// staves pass through the marker points, plus the line through the origin.
Tune tune_of(const QuarticCoeffs& coeffs, Tier tier = Tier::Cubic);

}  // namespace quartic
