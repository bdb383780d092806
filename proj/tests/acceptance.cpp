// Acceptance checks: one PASS/FAIL line per criterion. Exits non-zero if any fails.

#include "quartic/cli.hpp"
#include "quartic/oracle.hpp"
#include "quartic/sampling.hpp"
#include "quartic/tunes.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>

using namespace quartic;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (problems.size() < 5) problems.push_back(what);
    }
  }
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

// Within 0.01 of a value printed to 2 decimals.
void near(Outcome& o, const std::string& name, double got, double expected) {
  o.expect(std::fabs(got - expected) <= 0.01 + 1e-12,
           name + " = " + fmt("%.4f", got) + ", expected " + fmt("%.2f", expected));
}

int failures = 0;

void criterion(int n, const std::string& title, const std::function<Outcome()>& body, double budget_s = 0) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.problems.push_back(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0) o.expect(secs < budget_s, "runtime " + fmt("%.2f", secs) + " s over " + fmt("%.0f", budget_s) + " s");
  std::string line = (o.pass ? "PASS " : "FAIL ") + std::to_string(n) + " " + title;
  if (!o.detail.empty()) line += ": " + o.detail;
  for (const auto& p : o.problems) line += " | " + p;
  line += " (" + fmt("%.2f", secs) + " s)";
  std::puts(line.c_str());
  std::fflush(stdout);
  failures += !o.pass;
}

double approx(AlgebraicReal x) { return x.approx(); }

Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Outcome worked_example() {
  Outcome o;
  const QuarticCoeffs k{1, -3, -1, 1};
  const Classification cl = classify(k);
  std::map<std::string, double> v;
  for (const auto& m : cl.stationary.mu) v[m.name] = approx(m.x);
  for (const auto& l : cl.lambdas.lambdas) v[l.name] = approx(l.x);
  for (const auto& m : cl.markers.points) v[m.name] = m.value.to_double();
  for (const auto& t : cl.tangents.tangents) v["-delta(" + t.mu_name + ")"] = t.minus_delta;
  near(o, "mu1", v["mu1"], 1.00);
  near(o, "mu2", v["mu2"], -0.16);
  near(o, "mu3", v["mu3"], -1.59);
  near(o, "lambda1", v["lambda1"], 1.48);
  near(o, "lambda0", v["lambda0"], -0.31);
  near(o, "lambda2", v["lambda2"], -2.17);
  o.expect(cl.chain.c2 && cl.chain.c1 && cl.chain.gamma2 && cl.chain.gamma1, "chain entries missing");
  if (!o.pass) return o;
  near(o, "c2", cl.chain.c2->to_double(), -5.00);
  near(o, "c1", cl.chain.c1->to_double(), 1.75);
  near(o, "gamma2", cl.chain.gamma2->to_double(), -3.42);
  near(o, "gamma1", cl.chain.gamma1->to_double(), 1.27);
  o.expect(cl.chain.c0 == Rational(-13, 8), "c0 = " + to_string(cl.chain.c0));
  near(o, "d0", cl.chain.d0.get_d(), 2.64);
  near(o, "rho1", v["rho1"], 1.30);
  near(o, "rho2", v["rho2"], -2.30);
  near(o, "-delta1", v["-delta(mu1)"], -2.00);
  near(o, "-delta2", v["-delta(mu2)"], 0.08);
  near(o, "-delta3", v["-delta(mu3)"], -3.62);
  o.expect(cl.double_tangent.alpha && cl.double_tangent.beta, "double tangent missing");
  if (cl.double_tangent.alpha) near(o, "alpha", cl.double_tangent.alpha->to_double(), 1.05);
  if (cl.double_tangent.beta) near(o, "beta", cl.double_tangent.beta->to_double(), -1.55);
  o.expect(cl.cubic.count == 4, "count " + std::to_string(cl.cubic.count));
  // x1 is the largest root, bracketed by rho1 and lambda1.
  bool x1 = false;
  if (!cl.cubic.roots.empty()) {
    const RootEntry& top = cl.cubic.roots.back();
    x1 = top.interval.lo_label == "rho1" && top.interval.hi_label == "lambda1" && top.lo_value >= 1.30 - 0.01 &&
         top.hi_value <= 1.48 + 0.01;
    const Interval given = Interval::open(ExtReal::finite(QuadSurd(Rational(130, 100))),
                                          ExtReal::finite(QuadSurd(Rational(148, 100))), "", "");
    x1 = x1 && count_roots_adjusted(sturm_chain(k), given) == 1 &&
         count_roots_adjusted(sturm_chain(k), top.interval) == 1;
  }
  o.expect(x1, "x1 not isolated in (rho1, lambda1)");
  o.expect(cl.label.str() == "1.11(ii)", "label " + cl.label.str());
  o.expect(verify_report(k, cl.cubic).pass, "oracle rejects the report");
  o.detail = "22 values within 0.01, count 4, x1 in (rho1, lambda1), label " + cl.label.str();
  return o;
}

Outcome stationary_intervals() {
  Outcome o;
  const QuarticCoeffs k{1, -5, -1, 1};
  const ResolventChain ch = resolvent_chain(k);
  o.expect(ch.c2 && ch.c1, "c1, c2 missing");
  if (ch.c2) near(o, "c2", ch.c2->to_double(), -9.41);
  if (ch.c1) near(o, "c1", ch.c1->to_double(), 4.16);
  const auto et = eta_theta(k);
  o.expect(et.has_value(), "eta/theta missing");
  if (!et) return o;
  near(o, "eta1", et->eta1.to_double(), 0.70);
  near(o, "eta2", et->eta2.to_double(), -1.20);
  near(o, "theta1", et->theta1.to_double(), -2.14);
  near(o, "theta2", et->theta2.to_double(), 1.64);
  StationaryProfile prof = stationary_points(k);
  o.expect(prof.mu.size() == 3, "expected three stationary points");
  if (prof.mu.size() != 3) return o;
  AlgebraicReal& mu1 = prof.mu[0].x;
  AlgebraicReal& mu2 = prof.mu[1].x;
  AlgebraicReal& mu3 = prof.mu[2].x;
  // theta1 < mu3 < eta2 < mu2 < eta1 < mu1 < theta2, decided exactly.
  o.expect(compare_surd(mu3, et->theta1) > 0 && compare_surd(mu3, et->eta2) < 0, "mu3 outside (theta1, eta2)");
  o.expect(compare_surd(mu2, et->eta2) > 0 && compare_surd(mu2, et->eta1) < 0, "mu2 outside (eta2, eta1)");
  o.expect(compare_surd(mu1, et->eta1) > 0 && compare_surd(mu1, et->theta2) < 0, "mu1 outside (eta1, theta2)");
  for (const auto& b : prof.brackets) {
    const StationaryPoint* p = prof.find(b.name);
    o.expect(p != nullptr, "bracket for unknown " + b.name);
    if (!p) continue;
    AlgebraicReal x = p->x;
    const bool inside = (!b.interval.lo.is_finite() || compare_surd(x, b.interval.lo.value) > 0) &&
                        (!b.interval.hi.is_finite() || compare_surd(x, b.interval.hi.value) < 0);
    o.expect(inside, b.name + " outside its reported isolation interval");
  }
  near(o, "mu3", mu3.approx(), -1.96);
  near(o, "mu2", mu2.approx(), -0.10);
  near(o, "mu1", mu1.approx(), 1.31);
  o.detail = "c2, c1, eta, theta within 0.01; theta1 < mu3 < eta2 < mu2 < eta1 < mu1 < theta2 exact";
  return o;
}

Outcome oracle_sweep() {
  Outcome o;
  const auto inputs = cli::random_inputs(10000, 20240601);
  int count_ok = 0, intervals_ok = 0, possible_ok = 0;
  for (const auto& k : inputs) {
    const RootReport cubic = classify_cubic_tier(k);
    const Verdict v = verify_report(k, cubic);
    count_ok += cubic.count == v.oracle_count;
    intervals_ok += v.pass;
    const RootReport quad = classify_quadratic_tier(k);
    const Verdict vq = verify_report(k, quad);
    possible_ok += vq.pass;
    if (!v.pass) o.expect(false, k.str() + ": " + v.violations.front());
    if (!vq.pass) o.expect(false, k.str() + " (quadratic): " + vq.violations.front());
  }
  const auto n = std::to_string(inputs.size());
  o.detail = "count matches " + std::to_string(count_ok) + "/" + n + ", cubic reports verified " +
             std::to_string(intervals_ok) + "/" + n + ", quadratic sets hold the count " + std::to_string(possible_ok) +
             "/" + n;
  return o;
}

// Linear factor root of a polynomial whose gcd with its derivative is (x - r)^m.
Rational repeated_root(const UPoly& p) {
  UPoly g = gcd(p, p.derivative());
  while (g.degree() > 1) g = gcd(g, g.derivative());
  return -g.coeff(0) / g.coeff(1);
}

Outcome boundary_suite() {
  Outcome o;
  int cases = 0;
  auto check = [&](const QuarticCoeffs& k) {
    ++cases;
    const Classification cl = classify(k);
    const Verdict v = verify_report(k, cl.cubic);
    o.expect(v.pass, k.str() + ": " + (v.violations.empty() ? "" : v.violations.front()));
    o.expect(verify_report(k, cl.quadratic).pass, k.str() + ": quadratic tier rejected");
    return cl;
  };

  for (int a = -8; a <= 8; ++a) {
    const Rational A(a);
    const QuarticCoeffs k{A, Rational(3, 8) * A * A, A * A * A / 16, A * A * A * A / 256};
    const Classification cl = check(k);
    const bool one = cl.cubic.roots.size() == 1 && cl.cubic.roots[0].multiplicity == 4 &&
                     cl.cubic.roots[0].interval.is_point() &&
                     cl.cubic.roots[0].interval.lo.value == QuadSurd(-A / 4);
    o.expect(one, "(x+" + std::to_string(a) + "/4)^4 not a single root of multiplicity 4");
    o.expect(cl.stationary.kind == StationaryKind::Quadruple, "a=" + std::to_string(a) + " not flagged quadruple");
    o.expect(std::find(cl.label.ties.begin(), cl.label.ties.end(), "quadruple") != cl.label.ties.end(),
             "a=" + std::to_string(a) + " missing the quadruple tie");
  }

  // First discriminant zero: c = c0 +- (2k/9) sqrt(6k) with 6k = m^2.
  int saddles = 0;
  for (int a = -4; a <= 4; ++a)
    for (int m = 1; m <= 4; ++m)
      for (int sign : {-1, 1}) {
        const Rational A(a), kk = ratio(m * m, 6);
        const Rational b = Rational(3, 8) * A * A - kk;
        const Rational c = A / 2 * (b - A * A / 4) + sign * 2 * kk / 9 * m;
        const QuarticCoeffs base{A, b, c, 0};
        const UPoly deriv = base.poly().derivative();
        o.expect(gcd(deriv, deriv.derivative()).degree() >= 1, base.str() + ": derivative has no repeated root");
        o.expect(first_discriminant(A, b, c) == 0, base.str() + ": first discriminant nonzero");
        const Rational eta = repeated_root(deriv);
        const Rational d_triple = -(base.poly() - UPoly{base.d})(eta);
        for (int d = -4; d <= 4; ++d) check({A, b, c, d});
        const Classification cl = check({A, b, c, d_triple});
        const bool saddle = cl.stationary.kind == StationaryKind::SaddleMinLeft ||
                            cl.stationary.kind == StationaryKind::SaddleMinRight;
        o.expect(saddle, base.str() + ": not classified as a saddle case");
        bool triple = false;
        for (const auto& r : cl.cubic.roots)
          triple = triple || (r.multiplicity == 3 && r.interval.is_point() && r.interval.lo.value == QuadSurd(eta));
        o.expect(triple, base.str() + ": no triple root at the saddle");
        saddles += saddle && triple;
      }

  // Second discriminant zero: x^3 + ax^2 + bx + c = (x - r)^2 (x - s).
  int doubles = 0;
  for (int r = -3; r <= 3; ++r)
    for (int s = -3; s <= 3; ++s) {
      const Rational R = ratio(r, 2), S(s);
      const Rational a = -(2 * R + S), b = R * R + 2 * R * S, c = -R * R * S;
      o.expect(second_discriminant(a, b, c) == 0, "second discriminant nonzero");
      for (int d = -3; d <= 3; ++d) check({a, b, c, d});
      const Classification cl = check({a, b, c, 0});
      bool doubled = false;
      for (const auto& l : cl.lambdas.lambdas) doubled = doubled || l.multiplicity >= 2;
      o.expect(doubled, "no repeated lambda for r=" + std::to_string(r) + "/2, s=" + std::to_string(s));
      doubles += doubled;
    }
  o.detail = std::to_string(cases) + " boundary quartics verified; 17 quadruple, " + std::to_string(saddles) +
             " saddle/triple, " + std::to_string(doubles) + " repeated-lambda families";
  return o;
}

Outcome heuristic() {
  Outcome o;
  std::mt19937_64 rng(1995);
  int sampled = 0, at_most_two = 0, both_negative = 0, below_ratio = 0, between = 0, above_lambda = 0;
  while (sampled < 2000) {
    const QuarticCoeffs k = sampling::random_coeffs(rng);
    if (k.b <= Rational(3, 8) * k.a * k.a) continue;
    ++sampled;
    const SturmChain ch = sturm_chain(k);
    const int total = total_with_multiplicity(ch);
    const RootReport rep = classify_cubic_tier(k);
    o.expect(rep.count == total, k.str() + ": count disagrees with the oracle");
    at_most_two += total <= 2;
    if (!(k.c < 0 && k.d < 0)) continue;
    ++both_negative;
    const ExtReal ratio = ExtReal::finite(QuadSurd(-k.d / k.c)), zero = ExtReal::finite(QuadSurd(0));
    below_ratio += count_roots_adjusted(ch, Interval::open(ExtReal::neg_inf(), ratio, "", "")) == 1 &&
                   compare(ratio, zero) < 0;
    between += count_roots_adjusted(ch, Interval::open(ratio, zero, "", "")) == 1;
    LambdaSet lam = lambda_points(k);
    AlgebraicReal top = lam.lambdas.back().x;
    top.refine_to(Rational(1, mpz_class(1) << 40));
    const bool positive = lam.lambdas.size() == 1 && compare(top, Rational(0)) > 0;
    above_lambda +=
        positive && count_roots_adjusted(ch, Interval::open(ExtReal::finite(QuadSurd(top.hi())), ExtReal::pos_inf(), "",
                                                            "")) == 1;
  }
  const auto of = [](int x, int n) { return std::to_string(x) + "/" + std::to_string(n); };
  o.expect(at_most_two == sampled, "more than two roots in " + std::to_string(sampled - at_most_two) + " cases");
  o.expect(above_lambda == both_negative, "root above lambda missing in " + of(both_negative - above_lambda, both_negative));
  o.expect(below_ratio == both_negative,
           "claimed negative root below -d/c found in " + of(below_ratio, both_negative) +
               " cases; the negative root lies in (-d/c, 0) in " + of(between, both_negative));
  o.detail = "count <= 2 in " + of(at_most_two, sampled) + "; with c<0, d<0: one root above lambda1 in " +
             of(above_lambda, both_negative) + ", exactly one root below -d/c in " + of(below_ratio, both_negative);
  return o;
}

Outcome symmetry() {
  Outcome o;
  std::mt19937_64 rng(606);
  const double tol = 4 * default_root_width().get_d();
  auto same = [&](double x, double y) { return x == y || std::fabs(x - y) <= tol * std::max(1.0, std::fabs(x)); };
  int matched = 0;
  for (int i = 0; i < 1000; ++i) {
    const QuarticCoeffs k = sampling::random_coeffs(rng);
    const RootReport l = classify_cubic_tier(k), r = classify_cubic_tier(k.mirrored());
    bool ok = l.count == r.count && l.roots.size() == r.roots.size();
    for (size_t j = 0; ok && j < l.roots.size(); ++j) {
      const RootEntry& x = l.roots[j];
      const RootEntry& y = r.roots[r.roots.size() - 1 - j];
      ok = same(x.lo_value, -y.hi_value) && same(x.hi_value, -y.lo_value) && x.multiplicity == y.multiplicity &&
           x.sign == -y.sign;
    }
    o.expect(ok, k.str() + " and its mirror disagree");
    matched += ok;
  }
  o.detail = std::to_string(matched) + "/1000 mirrored pairs agree (counts, negated and swapped endpoints)";
  return o;
}

std::string run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "quartic");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return std::to_string(code) + "\n" + out.str();
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::string> sweep{"sweep", "--random", "1000", "--seed", "7"};
  const std::string first = run_cli(sweep), second = run_cli(sweep);
  o.expect(first.rfind("0\n", 0) == 0, "sweep did not exit 0");
  o.expect(first == second, "sweep CSV differs between runs");
  std::mt19937_64 rng(7);
  std::vector<QuarticCoeffs> inputs{{1, -3, -1, 1}, {1, -5, -1, 1}, {0, 0, 0, 1}};
  for (int i = 0; i < 30; ++i) inputs.push_back(sampling::random_coeffs(rng));
  int same = 0;
  for (const auto& k : inputs) {
    const std::vector<std::string> args{"tune", "--a", to_string(k.a), "--b", to_string(k.b),
                                        "--c", to_string(k.c), "--d", to_string(k.d)};
    const bool eq = run_cli(args) == run_cli(args);
    o.expect(eq, "tune differs for " + k.str());
    same += eq;
  }
  o.detail = "sweep --random 1000 --seed 7 identical over two runs (" + std::to_string(first.size()) +
             " bytes); tune identical for " + std::to_string(same) + "/" + std::to_string(inputs.size()) + " inputs";
  return o;
}

}  // namespace

int main() {
  criterion(1, "worked example (1,-3,-1,1)", worked_example, 1.0);
  criterion(2, "stationary isolation (1,-5,-1,1)", stationary_intervals);
  criterion(3, "oracle sweep of 10000 random quartics", oracle_sweep, 60.0);
  criterion(4, "boundary suite", boundary_suite);
  criterion(5, "heuristics above b = (3/2)(a^2/4)", heuristic);
  criterion(6, "reflection symmetry", symmetry);
  criterion(7, "determinism", determinism);
  std::printf("%d of 7 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
