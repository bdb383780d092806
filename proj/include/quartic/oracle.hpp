#pragma once

#include "quartic/classifier.hpp"
#include "quartic/core.hpp"
#include "quartic/poly.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace quartic {

/// Sturm sequence of a squarefree polynomial: p, p', then negated remainders.
struct SturmSequence {
  std::vector<UPoly> polys;
};

SturmSequence sturm_sequence(const UPoly& squarefree);

/// Sturm data for a quartic: the chain of its squarefree part, plus one chain
/// per squarefree factor of the Yun decomposition with its multiplicity.
struct SturmChain {
  UPoly poly;
  UPoly gcd_with_derivative;
  SturmSequence distinct;
  struct Factor {
    int multiplicity = 1;
    SturmSequence seq;
  };
  std::vector<Factor> factors;

  const std::vector<UPoly>& sequence() const { return distinct.polys; }
};

SturmChain sturm_chain(const QuarticCoeffs& coeffs);
SturmChain sturm_chain_of(const UPoly& p);

/// Sign variations of the sequence at a finite point or at an infinity.
int sign_variations(const SturmSequence& seq, const ExtReal& x);

struct EndpointIsRoot : std::runtime_error {
  explicit EndpointIsRoot(const std::string& where) : std::runtime_error("endpoint is a root: " + where) {}
};

/// Distinct real roots strictly inside the interval. Throws EndpointIsRoot
/// when a finite endpoint is a root; closedness flags are ignored.
int count_roots_in(const SturmChain& chain, const Interval& iv);
/// Distinct real roots in the interval, honouring closed ends.
int count_roots_adjusted(const SturmChain& chain, const Interval& iv);
/// Real roots in the interval counted with multiplicity, honouring closed ends.
int count_with_multiplicity(const SturmChain& chain, const Interval& iv);

int total_distinct(const SturmChain& chain);
int total_with_multiplicity(const SturmChain& chain);

struct Verdict {
  bool pass = true;
  int oracle_count = 0;  ///< with multiplicity
  std::vector<std::string> violations;
};

/// Checks a report against the Sturm counts alone.
Verdict verify_report(const QuarticCoeffs& coeffs, const RootReport& report);

}  // namespace quartic
