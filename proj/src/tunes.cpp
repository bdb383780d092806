#include "quartic/tunes.hpp"

#include "quartic/aux_cubic.hpp"
#include "quartic/resolvent.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>

namespace quartic {

namespace {

// A note before its stave rank is known. Only xi from an irrational mu lack
// an exact value; their bracket is fixed.
struct Pending {
  std::string name;
  int group = 0;
  std::optional<AlgebraicReal> value;
  Rational lo, hi;
  double approx = 0;
};

Pending algebraic_note(const std::string& name, int group, const AlgebraicReal& x) {
  Pending p{name, group, x, x.lo(), x.hi(), x.approx()};
  p.value->refine_to(Rational(1, mpz_class(1) << 64));
  p.lo = p.value->lo();
  p.hi = p.value->hi();
  return p;
}

// Enclosure of -delta = g(mu), where g is the quartic without its free term.
std::pair<Rational, Rational> intercept_range(AlgebraicReal mu, const UPoly& g, const Rational& width) {
  if (mu.is_rational()) {
    const Rational v = g(mu.lo());
    return {v, v};
  }
  mu.refine_to(width);
  return g.eval_range(mu.lo(), mu.hi());
}

// Sign of g(x) - g(y) for stationary points known to lie on distinct lines.
int compare_intercepts(const AlgebraicReal& x, const AlgebraicReal& y, const UPoly& g) {
  for (int bits = 64;; bits *= 2) {
    const Rational w(1, mpz_class(1) << bits);
    const auto [xlo, xhi] = intercept_range(x, g, w);
    const auto [ylo, yhi] = intercept_range(y, g, w);
    if (xhi < ylo) return -1;
    if (yhi < xlo) return 1;
    if (bits >= 4096) return sgn(Rational(xlo + xhi - ylo - yhi));
  }
}

Tune assemble(std::vector<Pending> pending, const std::vector<int>& rank_of_group, int staves) {
  std::stable_sort(pending.begin(), pending.end(), [](const Pending& p, const Pending& q) {
    if (p.hi < q.lo) return true;
    if (q.hi < p.lo) return false;
    return p.lo + p.hi < q.lo + q.hi;
  });
  Tune t;
  t.staves = staves;
  for (const auto& p : pending) {
    Note n;
    n.stave = rank_of_group[p.group];
    n.landmark = p.name;
    n.x = p.approx;
    n.ratio = pythagorean_ratio(n.stave);
    n.frequency = kBaseFrequency * n.ratio.get_d();
    t.notes.push_back(std::move(n));
  }
  return t;
}

Tune cubic_tune(const QuarticCoeffs& k) {
  const StationaryProfile prof = stationary_points(k);
  const LambdaSet lam = lambda_points(k);
  const SpecialTangents tangents = special_tangents(k, prof);
  const UPoly g = k.poly() - UPoly{k.d};
  const bool level_minima = prof.kind == StationaryKind::MinMaxMin && k.c == double_tangent(k).c0;

  // Group 0 is the line through the origin. Two stationary points share a line
  // only when the two minima are level, which happens exactly at c = c0.
  std::vector<int> group_of(prof.mu.size());
  std::vector<const AlgebraicReal*> representative{nullptr};
  for (size_t i = 0; i < prof.mu.size(); ++i) {
    AlgebraicReal mu = prof.mu[i].x;
    if (mu.sign_of(g) == 0) {
      group_of[i] = 0;
      continue;
    }
    group_of[i] = -1;
    if (level_minima && prof.mu[i].kind == PointKind::Min)
      for (size_t j = 0; j < i; ++j)
        if (group_of[j] > 0 && prof.mu[j].kind == PointKind::Min) group_of[i] = group_of[j];
    if (group_of[i] < 0) {
      group_of[i] = static_cast<int>(representative.size());
      representative.push_back(&prof.mu[i].x);
    }
  }

  auto below = [&](int p, int q) {
    if (p == q) return false;
    if (p == 0) {
      AlgebraicReal y = *representative[q];
      return y.sign_of(g) > 0;
    }
    if (q == 0) {
      AlgebraicReal x = *representative[p];
      return x.sign_of(g) < 0;
    }
    return compare_intercepts(*representative[p], *representative[q], g) < 0;
  };
  std::vector<int> order(representative.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), below);
  std::vector<int> rank_of_group(order.size());
  for (size_t r = 0; r < order.size(); ++r) rank_of_group[order[r]] = static_cast<int>(r);

  std::vector<Pending> pending;
  // Through the origin: the special quartic of a mu there is the privileged
  // one, so its xi are already among the lambda and 0.
  std::vector<AlgebraicReal> placed;
  auto place = [&](const std::string& name, const AlgebraicReal& x) {
    for (auto& y : placed) {
      AlgebraicReal xc = x;
      if (compare(xc, y) == 0) return;
    }
    placed.push_back(x);
    pending.push_back(algebraic_note(name, 0, x));
  };
  for (size_t i = 0; i < prof.mu.size(); ++i)
    if (group_of[i] == 0) place(prof.mu[i].name, prof.mu[i].x);
  for (const auto& l : lam.lambdas) place(l.name, l.x);
  place("0", AlgebraicReal::exact(0));

  for (size_t i = 0; i < prof.mu.size(); ++i) {
    if (group_of[i] == 0) continue;
    pending.push_back(algebraic_note(prof.mu[i].name, group_of[i], prof.mu[i].x));
    for (const auto& xi : tangents.tangents[i].xi) {
      if (xi.exact) {
        pending.push_back(algebraic_note(xi.name, group_of[i], AlgebraicReal::from_surd(*xi.exact)));
      } else {
        pending.push_back({xi.name, group_of[i], std::nullopt, xi.lo, xi.hi, xi.approx});
      }
    }
  }
  return assemble(std::move(pending), rank_of_group, static_cast<int>(order.size()));
}

Tune quadratic_tune(const QuarticCoeffs& k) {
  const MarkerSet ms = markers_for_regime(k);
  const UPoly S = subquartic(k);
  std::vector<QuadSurd> intercepts{QuadSurd(0)};
  std::vector<Pending> pending;
  std::vector<QuadSurd> placed;
  auto place = [&](const std::string& name, const QuadSurd& x) {
    for (const auto& y : placed)
      if (y == x) return;
    placed.push_back(x);
    const QuadSurd icpt = evaluate(S, x) + QuadSurd(k.c) * x;
    int group = -1;
    for (size_t i = 0; i < intercepts.size(); ++i)
      if (intercepts[i] == icpt) group = static_cast<int>(i);
    if (group < 0) {
      group = static_cast<int>(intercepts.size());
      intercepts.push_back(icpt);
    }
    pending.push_back(algebraic_note(name, group, AlgebraicReal::from_surd(x)));
  };
  for (const auto& p : ms.points) place(p.name, p.value);
  place("0", QuadSurd(0));

  std::vector<int> order(intercepts.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int p, int q) { return compare(intercepts[p], intercepts[q]) < 0; });
  std::vector<int> rank_of_group(order.size());
  for (size_t r = 0; r < order.size(); ++r) rank_of_group[order[r]] = static_cast<int>(r);
  return assemble(std::move(pending), rank_of_group, static_cast<int>(order.size()));
}

}  // namespace

Rational pythagorean_ratio(int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) {
    r *= Rational(3, 2);
    if (r >= 2) r /= 2;
  }
  return r;
}

std::string Tune::text() const {
  std::string out;
  char buf[256];
  for (const auto& n : notes) {
    std::snprintf(buf, sizeof buf, "stave=%d landmark=%s x=%.12g ratio=%s/%s freq=%.12g\n", n.stave, n.landmark.c_str(),
                  n.x, n.ratio.get_num().get_str().c_str(), n.ratio.get_den().get_str().c_str(), n.frequency);
    out += buf;
  }
  return out;
}

Tune tune_of(const QuarticCoeffs& k, Tier tier) { return tier == Tier::Cubic ? cubic_tune(k) : quadratic_tune(k); }

}  // namespace quartic
