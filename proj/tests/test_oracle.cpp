#include <doctest.h>

#include "quartic/oracle.hpp"
#include "test_support.hpp"

#include <random>

using namespace quartic;

namespace {

Interval open_iv(const Rational& lo, const Rational& hi) {
  return Interval::open(ExtReal::finite(QuadSurd(lo)), ExtReal::finite(QuadSurd(hi)), "", "");
}

Interval whole() { return Interval::open(ExtReal::neg_inf(), ExtReal::pos_inf(), "", ""); }

}  // namespace

TEST_CASE("sturm chain of the worked example") {
  const SturmChain ch = sturm_chain({1, -3, -1, 1});
  CHECK(ch.sequence().size() == 5);
  // Leading signs at -inf alternate with degree parity: + - + - +
  CHECK(sign_variations(ch.distinct, ExtReal::neg_inf()) == 4);
  CHECK(sign_variations(ch.distinct, ExtReal::pos_inf()) == 0);
  CHECK(total_distinct(ch) == 4);
  // Negated-remainder recurrence: p_{k-1} = q p_k - p_{k+1}.
  const auto& s = ch.sequence();
  for (size_t i = 2; i < s.size(); ++i) CHECK(s[i] == -(s[i - 2] % s[i - 1]));
}

TEST_CASE("sturm chain with repeated roots") {
  const SturmChain ch = sturm_chain({-4, 6, -4, 1});
  CHECK(ch.gcd_with_derivative.degree() == 3);
  CHECK(ch.distinct.polys.front() == UPoly{-1, 1});
  CHECK(total_distinct(ch) == 1);
  CHECK(total_with_multiplicity(ch) == 4);
  REQUIRE(ch.factors.size() == 1);
  CHECK(ch.factors[0].multiplicity == 4);

  // (x - 1)^2 (x + 2): Yun factors of multiplicity 1 and 2.
  const SturmChain mixed = sturm_chain_of(UPoly{-1, 1} * UPoly{-1, 1} * UPoly{2, 1});
  CHECK(total_distinct(mixed) == 2);
  CHECK(total_with_multiplicity(mixed) == 3);

  CHECK(total_distinct(sturm_chain({0, 0, 0, 1})) == 0);
}

TEST_CASE("count_roots_in") {
  const SturmChain w = sturm_chain({1, -3, -1, 1});
  CHECK(count_roots_in(w, open_iv(Rational(130, 100), Rational(148, 100))) == 1);
  CHECK(count_roots_in(sturm_chain({0, 0, 0, 1}), open_iv(-10, 10)) == 0);
  const SturmChain m1 = sturm_chain({0, 0, 0, -1});
  CHECK(count_roots_in(m1, open_iv(0, 2)) == 1);
  CHECK_THROWS_AS(count_roots_in(m1, open_iv(1, 2)), EndpointIsRoot);
  Interval closed = open_iv(1, 2);
  CHECK(count_roots_adjusted(m1, closed) == 0);
  closed.lo_closed = true;
  CHECK(count_roots_adjusted(m1, closed) == 1);
  CHECK(count_roots_adjusted(m1, Interval::point(QuadSurd(-1), "")) == 1);
  // Surd endpoints are evaluated exactly.
  const Interval around = Interval::open(ExtReal::finite(QuadSurd(0, 1, 2)), ExtReal::finite(QuadSurd(3)), "", "");
  CHECK(count_roots_in(sturm_chain({0, -4, 0, 2}), around) == 1);  // x^4 - 4x^2 + 2: roots +-sqrt(2 +- sqrt 2)
}

TEST_CASE("count_roots_in is additive over adjacent intervals") {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 500; ++i) {
    const QuarticCoeffs k = testing::random_coeffs(rng);
    const SturmChain ch = sturm_chain(k);
    Rational cut = testing::random_rational(rng, 10, 16);
    Interval left = Interval::open(ExtReal::neg_inf(), ExtReal::finite(QuadSurd(cut)), "", "");
    Interval right = Interval::open(ExtReal::finite(QuadSurd(cut)), ExtReal::pos_inf(), "", "");
    left.hi_closed = true;
    CHECK(count_roots_adjusted(ch, left) + count_roots_adjusted(ch, right) == total_distinct(ch));
    CHECK(count_with_multiplicity(ch, left) + count_with_multiplicity(ch, right) == total_with_multiplicity(ch));
    const int total = total_with_multiplicity(ch);
    CHECK(total % 2 == 0);
    CHECK(count_roots_adjusted(ch, whole()) == total_distinct(ch));
  }
}

TEST_CASE("verify_report passes true reports and catches corrupted ones") {
  const QuarticCoeffs w{1, -3, -1, 1};
  RootReport rep = classify_cubic_tier(w);
  CHECK(verify_report(w, rep).pass);
  CHECK(verify_report(w, classify_quadratic_tier(w)).pass);
  CHECK(verify_report({1, -5, -1, 1}, classify_cubic_tier({1, -5, -1, 1})).pass);

  // Shift the interval of the largest root by +1.
  RootEntry& last = rep.roots.back();
  for (ExtReal* e : {&last.interval.lo, &last.interval.hi})
    if (e->is_finite()) e->value = e->value + QuadSurd(1);
  const Verdict v = verify_report(w, rep);
  CHECK_FALSE(v.pass);
  bool named = false;
  for (const auto& s : v.violations) named = named || s.find("holds 0 roots") != std::string::npos;
  CHECK(named);

  RootReport wrong = classify_cubic_tier(w);
  wrong.count = 2;
  CHECK_FALSE(verify_report(w, wrong).pass);
}
