#include <doctest.h>

#include "quartic/tunes.hpp"
#include "test_support.hpp"

#include <cmath>
#include <map>
#include <regex>
#include <set>
#include <sstream>

using namespace quartic;

namespace {

// Ordinate intercept of the slope -c line through (x, S(x)), in doubles.
double intercept(const QuarticCoeffs& k, double x) {
  const double a = k.a.get_d(), b = k.b.get_d(), c = k.c.get_d();
  return x * x * (x * x + a * x + b) + c * x;
}

void check_shape(const QuarticCoeffs& k, const Tune& t) {
  std::set<int> used;
  for (size_t i = 0; i < t.notes.size(); ++i) {
    const Note& n = t.notes[i];
    CHECK(n.ratio >= 1);
    CHECK(n.ratio < 2);
    CHECK(n.frequency >= 220.0);
    CHECK(n.frequency < 440.0);
    CHECK(n.ratio == pythagorean_ratio(n.stave));
    used.insert(n.stave);
    if (i > 0) CHECK(t.notes[i - 1].x <= n.x);
  }
  CHECK(static_cast<int>(used.size()) == t.staves);
  // A higher stave means a higher intercept.
  for (const auto& p : t.notes)
    for (const auto& q : t.notes) {
      const double ip = intercept(k, p.x), iq = intercept(k, q.x);
      const double tol = 1e-6 * (1 + std::fabs(ip) + std::fabs(iq));
      if (p.stave < q.stave) CHECK(ip < iq + tol);
      if (p.stave == q.stave) CHECK(std::fabs(ip - iq) < tol);
    }
}

}  // namespace

TEST_CASE("pythagorean ratios") {
  CHECK(pythagorean_ratio(0) == 1);
  CHECK(pythagorean_ratio(1) == Rational(3, 2));
  CHECK(pythagorean_ratio(2) == Rational(9, 8));
  CHECK(pythagorean_ratio(3) == Rational(27, 16));
  CHECK(pythagorean_ratio(4) == Rational(81, 64));
  for (int k = 0; k < 40; ++k) {
    const Rational r = pythagorean_ratio(k);
    CHECK(r >= 1);
    CHECK(r < 2);
  }
}

TEST_CASE("tune of the worked example") {
  const QuarticCoeffs k{1, -3, -1, 1};
  const Tune t = tune_of(k);
  // mu1..3, lambda0..2, xi of mu1 and mu2 (mu3 is the global minimum), and 0.
  REQUIRE(t.notes.size() == 11);
  CHECK(t.staves == 4);
  std::map<std::string, int> stave;
  for (const auto& n : t.notes) stave[n.landmark] = n.stave;
  // Intercepts: -delta3 = -3.62 < -delta1 = -2.00 < 0 < -delta2 = 0.08.
  CHECK(stave.at("mu3") == 0);
  CHECK(stave.at("mu1") == 1);
  CHECK(stave.at("xi1_1") == 1);
  CHECK(stave.at("xi1_2") == 1);
  CHECK(stave.at("lambda0") == 2);
  CHECK(stave.at("lambda1") == 2);
  CHECK(stave.at("lambda2") == 2);
  CHECK(stave.at("0") == 2);
  CHECK(stave.at("mu2") == 3);
  CHECK(stave.at("xi2_1") == 3);
  CHECK(stave.at("xi2_2") == 3);
  CHECK(stave.count("xi3_1") == 0);
  check_shape(k, t);

  const std::string text = t.text();
  CHECK(text == tune_of(k).text());
  std::istringstream in(text);
  const std::regex line(R"(stave=\d+ landmark=\S+ x=\S+ ratio=\d+/\d+ freq=\S+)");
  int lines = 0;
  for (std::string s; std::getline(in, s); ++lines) CHECK(std::regex_match(s, line));
  CHECK(lines == 11);
  CHECK(text.find("landmark=xi1_2 x=-2 ratio=3/2 freq=330\n") != std::string::npos);
  CHECK(text.find("landmark=mu1 x=1 ratio=3/2 freq=330\n") != std::string::npos);
  CHECK(text.find("landmark=mu3 x=-1.593") != std::string::npos);
}

TEST_CASE("tune of x^4 + 1") {
  const Tune t = tune_of({0, 0, 0, 1});
  REQUIRE(t.notes.size() == 1);
  CHECK(t.notes[0].landmark == "mu1");
  CHECK(t.notes[0].stave == 0);
  CHECK(t.notes[0].ratio == 1);
  CHECK(t.notes[0].frequency == 220.0);
  CHECK(t.text() == "stave=0 landmark=mu1 x=0 ratio=1/1 freq=220\n");
}

TEST_CASE("level minima share a stave") {
  // (x^2 - 1)^2 + 1: minima at -1 and 1 on one line, the maximum at 0 on the
  // line through the origin together with lambda = +-sqrt 2.
  const QuarticCoeffs k{0, -2, 0, 2};
  const Tune t = tune_of(k);
  REQUIRE(t.notes.size() == 5);
  CHECK(t.staves == 2);
  std::vector<std::string> names;
  for (const auto& n : t.notes) names.push_back(n.landmark);
  CHECK(names == std::vector<std::string>{"lambda2", "mu3", "mu2", "mu1", "lambda1"});
  CHECK(t.notes[1].stave == 0);
  CHECK(t.notes[3].stave == 0);
  CHECK(t.notes[2].stave == 1);
  check_shape(k, t);
}

TEST_CASE("quadratic-tier tune of the worked example") {
  const QuarticCoeffs k{1, -3, -1, 1};
  const Tune t = tune_of(k, Tier::Quadratic);
  REQUIRE(t.notes.size() == 3);
  // Intercepts c*rho: -rho1 < 0 < -rho2.
  CHECK(t.notes[0].landmark == "rho2");
  CHECK(t.notes[0].stave == 2);
  CHECK(t.notes[1].landmark == "0");
  CHECK(t.notes[1].stave == 1);
  CHECK(t.notes[2].landmark == "rho1");
  CHECK(t.notes[2].stave == 0);
  check_shape(k, t);
}

TEST_CASE("random tunes are well formed and deterministic") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 300; ++i) {
    const QuarticCoeffs k = testing::random_coeffs(rng);
    const Tune t = tune_of(k);
    check_shape(k, t);
    CHECK(t.text() == tune_of(k).text());
    // Every stationary point is a note; lambda, xi and 0 may coincide.
    const Classification cl = classify(k);
    CHECK(t.notes.size() >= cl.stationary.mu.size());
    CHECK(t.notes.size() <= 1 + cl.stationary.mu.size() + cl.lambdas.lambdas.size() + 2 * cl.stationary.mu.size());
    check_shape(k, tune_of(k, Tier::Quadratic));
  }
}
