#include <doctest.h>

#include "quartic/aux_cubic.hpp"
#include "test_support.hpp"

#include <random>

using namespace quartic;

namespace {

bool near(double x, double want) { return std::fabs(x - want) <= 0.01; }

std::vector<double> approx_values(const std::vector<CertifiedRoot>& roots) {
  std::vector<double> out;
  for (const auto& r : roots) out.push_back(r.value.approx());
  return out;
}

// Standard discriminant of A x^3 + B x^2 + C x + D.
Rational textbook_disc(const Rational& A, const Rational& B, const Rational& C, const Rational& D) {
  return 18 * A * B * C * D - 4 * B * B * B * D + B * B * C * C - 4 * A * C * C * C - 27 * A * A * D * D;
}

}  // namespace

TEST_CASE("cubic discriminants") {
  const CubicDiscriminants w = cubic_discriminants({1, -3, -1, 1});
  CHECK(w.delta1 > 0);
  CHECK(w.delta2 > 0);
  const CubicDiscriminants z = cubic_discriminants({0, 0, 0, 0});
  CHECK(z.delta1 == 0);
  CHECK(z.delta2 == 0);
  const CubicDiscriminants one = cubic_discriminants({0, 1, 0, 0});
  CHECK(one.delta1 == -128);
  CHECK(solve_cubic_real(4, 0, 2, 0).size() == 1);
}

TEST_CASE("solve_cubic_real on the worked example's cubics") {
  const auto mu = approx_values(solve_cubic_real(4, 3, -6, -1));
  REQUIRE(mu.size() == 3);
  CHECK(near(mu[0], -1.59));
  CHECK(near(mu[1], -0.16));
  CHECK(near(mu[2], 1.00));
  const auto lam = approx_values(solve_cubic_real(1, 1, -3, -1));
  REQUIRE(lam.size() == 3);
  CHECK(near(lam[0], -2.17));
  CHECK(near(lam[1], -0.31));
  CHECK(near(lam[2], 1.48));
}

TEST_CASE("solve_cubic_real multiplicities and errors") {
  const auto triple = solve_cubic_real(1, 0, 0, 0);
  REQUIRE(triple.size() == 1);
  CHECK(triple[0].multiplicity == 3);
  CHECK(triple[0].value.is_rational());
  CHECK(compare(triple[0].value, Rational(0)) == 0);
  const auto dbl = solve_cubic_real(2, -6, 0, 8);  // 2 (x-2)^2 (x+1)
  REQUIRE(dbl.size() == 2);
  CHECK(dbl[0].multiplicity == 1);
  CHECK(compare(dbl[0].value, Rational(-1)) == 0);
  CHECK(dbl[1].multiplicity == 2);
  CHECK(compare(dbl[1].value, Rational(2)) == 0);
  CHECK_THROWS_AS(solve_cubic_real(0, 1, 2, 3), std::invalid_argument);
}

TEST_CASE("certified brackets: width, sign change, count against discriminant") {
  std::mt19937_64 rng(31);
  const Rational width = default_root_width();
  for (int i = 0; i < 5000; ++i) {
    Rational A = testing::random_rational(rng, 10, 16);
    if (A == 0) A = 1;
    const Rational B = testing::random_rational(rng, 10, 16), C = testing::random_rational(rng, 10, 16),
                   D = testing::random_rational(rng, 10, 16);
    const auto roots = solve_cubic_real(A, B, C, D);
    const UPoly p{D, C, B, A};
    int total = 0;
    for (size_t j = 0; j < roots.size(); ++j) {
      const AlgebraicReal& r = roots[j].value;
      total += roots[j].multiplicity;
      if (r.is_rational()) {
        CHECK(p(r.lo()) == 0);
      } else {
        CHECK(r.width() <= width);
        CHECK(p.sign_at(r.lo()) * p.sign_at(r.hi()) < 0);
      }
      if (j > 0) CHECK(roots[j - 1].value.hi() < r.lo());
    }
    const Rational disc = textbook_disc(A, B, C, D);
    if (disc > 0) CHECK(roots.size() == 3);
    if (disc < 0) CHECK(roots.size() == 1);
    if (disc == 0) CHECK(total == 3);
    if (disc != 0) CHECK(total == static_cast<int>(roots.size()));
  }
}

TEST_CASE("certified brackets on near-degenerate cubics") {
  // (x - 1)(x - 1 - 1e-12)(x + 3): two roots closer than the default width.
  const Rational e(1, mpz_class("1000000000000"));
  const UPoly p = UPoly{-1, 1} * UPoly{-1 - e, 1} * UPoly{3, 1};
  const auto roots = solve_cubic_real(p.coeff(3), p.coeff(2), p.coeff(1), p.coeff(0));
  REQUIRE(roots.size() == 3);
  CHECK(roots[1].value.hi() <= roots[2].value.lo());
}

TEST_CASE("stationary points of the second example") {
  const StationaryProfile prof = stationary_points({1, -5, -1, 1});
  CHECK(prof.kind == StationaryKind::MinMaxMin);
  REQUIRE(prof.mu.size() == 3);
  CHECK(near(prof.find("mu1")->x.approx(), 1.31));
  CHECK(near(prof.find("mu2")->x.approx(), -0.10));
  CHECK(near(prof.find("mu3")->x.approx(), -1.96));
  CHECK(prof.find("mu1")->kind == PointKind::Min);
  CHECK(prof.find("mu2")->kind == PointKind::Max);
  CHECK(prof.find("mu3")->kind == PointKind::Min);
  // -2.14 < mu3 < -1.20 < mu2 < 0.70 < mu1 < 1.64
  CHECK(-2.14 < prof.find("mu3")->x.approx());
  CHECK(prof.find("mu3")->x.approx() < -1.20);
  CHECK(-1.20 < prof.find("mu2")->x.approx());
  CHECK(prof.find("mu2")->x.approx() < 0.70);
  CHECK(0.70 < prof.find("mu1")->x.approx());
  CHECK(prof.find("mu1")->x.approx() < 1.64);
}

TEST_CASE("stationary profile kinds at the boundaries") {
  const StationaryProfile quad = stationary_points({-4, 6, -4, 1});
  CHECK(quad.kind == StationaryKind::Quadruple);
  REQUIRE(quad.mu.size() == 1);
  CHECK(compare(quad.mu[0].x, Rational(1)) == 0);

  // (a, b) = (2, 0): 6k = 9 makes c1 = 0 and c2 = -2 rational.
  const StationaryProfile right = stationary_points({2, 0, 0, 0});  // 4x^3 + 6x^2 = 2x^2 (2x + 3)
  CHECK(right.kind == StationaryKind::SaddleMinRight);
  CHECK(right.find("mu2")->kind == PointKind::Saddle);
  CHECK(compare(right.find("mu2")->x, Rational(0)) == 0);
  CHECK(compare(right.find("mu1")->x, Rational(-3, 2)) == 0);
  CHECK(right.brackets[0].interval.is_point());

  const StationaryProfile left = stationary_points({2, 0, -2, 0});  // 2 (x + 1)^2 (2x - 1)
  CHECK(left.kind == StationaryKind::SaddleMinLeft);
  CHECK(compare(left.find("mu2")->x, Rational(-1)) == 0);
  CHECK(compare(left.find("mu1")->x, Rational(1, 2)) == 0);
  CHECK(left.brackets[1].interval.lo.value == QuadSurd(Rational(1, 2)));
}

TEST_CASE("stationary points fall inside their eta/theta brackets") {
  std::mt19937_64 rng(32);
  int three = 0;
  for (int i = 0; i < 40000 && three < 10000; ++i) {
    const QuarticCoeffs k = testing::random_coeffs(rng);
    StationaryProfile prof = stationary_points(k);
    if (cubic_discriminants(k).delta1 > 0) {
      ++three;
      CHECK(prof.kind == StationaryKind::MinMaxMin);
    }
    REQUIRE(prof.brackets.size() == prof.mu.size());
    for (const auto& [name, iv] : prof.brackets) {
      StationaryPoint* p = nullptr;
      for (auto& m : prof.mu)
        if (m.name == name) p = &m;
      REQUIRE(p);
      if (iv.lo.is_finite()) CHECK(compare_surd(p->x, iv.lo.value) >= (iv.lo_closed ? 0 : 1));
      if (iv.hi.is_finite()) CHECK(compare_surd(p->x, iv.hi.value) <= (iv.hi_closed ? 0 : -1));
    }
  }
  CHECK(three == 10000);
}

TEST_CASE("lambda points") {
  const LambdaSet w = lambda_points({1, -3, -1, 1});
  REQUIRE(w.lambdas.size() == 3);
  CHECK(w.lambdas[0].name == "lambda2");
  CHECK(near(w.lambdas[0].x.approx(), -2.17));
  CHECK(w.lambdas[1].name == "lambda0");
  CHECK(near(w.lambdas[1].x.approx(), -0.31));
  CHECK(w.lambdas[2].name == "lambda1");
  CHECK(near(w.lambdas[2].x.approx(), 1.48));
  CHECK(w.delta2_sign > 0);

  const LambdaSet z = lambda_points({0, 0, 0, 0});
  REQUIRE(z.lambdas.size() == 1);
  CHECK(z.lambdas[0].multiplicity == 3);
  CHECK(z.lambdas[0].name == "lambda1");

  const LambdaSet one = lambda_points({0, 1, 0, 0});
  REQUIRE(one.lambdas.size() == 1);
  CHECK(compare(one.lambdas[0].x, Rational(0)) == 0);
  CHECK(one.delta2_sign < 0);
}

TEST_CASE("the quartic equals d at every lambda") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 1000; ++i) {
    const QuarticCoeffs k = testing::random_coeffs(rng);
    LambdaSet set = lambda_points(k);
    const UPoly g = k.poly() - UPoly{k.d};
    for (auto& l : set.lambdas) CHECK(l.x.sign_of(g) == 0);
  }
}
