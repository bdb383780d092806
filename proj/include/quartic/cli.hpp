#pragma once

#include "quartic/classifier.hpp"
#include "quartic/core.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace quartic::cli {

enum ExitCode { kOk = 0, kViolation = 1, kUsage = 2, kUnwritable = 3 };

/// Bad flag values; the message names the flag.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational parse_flag(const std::string& flag, const std::string& text);

/// START:STOP:STEP with a positive step, or a single value.
struct Range {
  Rational start, stop, step;
  std::vector<Rational> values() const;
};

Range parse_range(const std::string& flag, const std::string& text);

struct Precision {
  bool two_decimals = false;  ///< round to 2 decimals instead of 12 significant digits
  double operator()(double x) const;
};

nlohmann::ordered_json classification_json(const Classification& cl, Precision p);

struct SweepRow {
  QuarticCoeffs coeffs;
  CaseLabel label;
  int count = 0;
  int oracle_count = 0;
  bool pass = true;
};

SweepRow sweep_row(const QuarticCoeffs& coeffs);

/// Rows in input order; evaluated on up to `threads` workers.
std::vector<SweepRow> run_sweep(const std::vector<QuarticCoeffs>& inputs, unsigned threads);

std::string csv_header();
std::string csv_line(const SweepRow& row);

/// Seeded rational quartics with coefficients in [-bound, bound] and
/// denominators at most max_den.
std::vector<QuarticCoeffs> random_inputs(std::size_t n, std::uint64_t seed, long bound = 10, long max_den = 16);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace quartic::cli
