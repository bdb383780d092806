#include "quartic/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>

namespace quartic {

namespace {

// A root of h(x) = x^2 + (a + 2mu) x + (b + 2a mu + 3mu^2) for irrational mu.
// Signs of h at rational points are exact through mu's defining polynomial.
struct XiRoot {
  Rational a, b;
  AlgebraicReal mu;
  Rational lo, hi;
  int sign_lo = 0;
  double approx = 0;

  int h_sign(const Rational& t) { return mu.sign_of(UPoly{t * t + a * t + b, 2 * t + 2 * a, 3}); }
  bool exact() const { return lo == hi; }

  void refine() {
    if (exact()) return;
    const Rational mid = (lo + hi) / 2;
    const int s = h_sign(mid);
    if (s == 0) {
      lo = hi = mid;
    } else if (s == sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  // Sign of this root minus r.
  int compare_rational(const Rational& r) {
    if (exact()) return sgn(lo - r);
    if (r <= lo) return 1;
    if (r >= hi) return -1;
    const int s = h_sign(r);
    if (s == 0) return 0;
    return s == sign_lo ? 1 : -1;
  }
};

// Precondition: the discriminant of h at mu is positive and mu is irrational.
XiRoot make_xi(const Rational& a, const Rational& b, const AlgebraicReal& mu, bool larger) {
  XiRoot x{a, b, mu, 0, 0, 0, 0};

  // A point between the two roots: the vertex of h, taken at ever better
  // approximations of mu until h is negative there.
  Rational inner;
  for (;;) {
    const Rational m = (x.mu.lo() + x.mu.hi()) / 2;
    inner = -(a + 2 * m) / 2;
    if (x.h_sign(inner) < 0) break;
    x.mu.refine();
  }
  const int dir = larger ? 1 : -1;
  Rational step = 1, outer;
  for (;;) {
    outer = inner + dir * step;
    const int s = x.h_sign(outer);
    if (s == 0) {
      x.lo = x.hi = outer;
      x.approx = outer.get_d();
      return x;
    }
    if (s > 0) break;
    step *= 2;
  }
  x.lo = larger ? inner : outer;
  x.hi = larger ? outer : inner;
  x.sign_lo = larger ? -1 : 1;

  const double m = mu.approx();
  const double disc = a.get_d() * a.get_d() - 4 * b.get_d() - 4 * a.get_d() * m - 8 * m * m;
  const double seed = (-(a.get_d() + 2 * m) + dir * std::sqrt(std::max(disc, 0.0))) / 2;
  if (std::isfinite(seed)) {
    const double eps = std::ldexp(1.0, -30) * std::max(1.0, std::fabs(seed));
    const Rational l = from_double(seed - eps), h = from_double(seed + eps);
    if (x.lo < l && h < x.hi) {
      const int sl = x.h_sign(l), sh = x.h_sign(h);
      if (sl == 0) {
        x.lo = x.hi = l;
      } else if (sh == 0) {
        x.lo = x.hi = h;
      } else if (sl == x.sign_lo && sh == -x.sign_lo) {
        x.lo = l;
        x.hi = h;
      }
    }
  }
  while (x.hi - x.lo > default_root_width()) x.refine();
  x.approx = Rational((x.lo + x.hi) / 2).get_d();
  return x;
}

enum Priority { kMu = 0, kLambda = 1, kMarker = 2, kEta = 3, kRatio = 4, kZero = 5, kXi = 6 };

struct Landmark {
  std::vector<std::pair<int, std::string>> names;
  bool is_xi = false;
  AlgebraicReal alg;
  XiRoot xi;
  std::optional<QuadSurd> surd;
  int fsign = 0;
  int multiplicity = 0;  // as a root of the quartic; 0 when not a root

  int priority() const { return names.front().first; }
  std::string label() const {
    std::string s;
    for (const auto& [p, n] : names) s += (s.empty() ? "" : "=") + n;
    return s;
  }
  const Rational& lo() const { return is_xi ? xi.lo : alg.lo(); }
  const Rational& hi() const { return is_xi ? xi.hi : alg.hi(); }
  bool is_point() const { return lo() == hi(); }
  Rational width() const { return hi() - lo(); }
  void refine() {
    if (is_xi) xi.refine();
    else alg.refine();
  }
  double approx() const { return is_xi ? xi.approx : alg.approx(); }
};

Landmark algebraic_landmark(int priority, std::string name, const AlgebraicReal& x) {
  Landmark l;
  l.names = {{priority, std::move(name)}};
  l.alg = x;
  return l;
}

Landmark surd_landmark(int priority, std::string name, const QuadSurd& x) {
  Landmark l = algebraic_landmark(priority, std::move(name), AlgebraicReal::from_surd(x));
  l.surd = x;
  return l;
}

int compare_to_rational(Landmark& x, const Rational& r) {
  return x.is_xi ? x.xi.compare_rational(r) : compare(x.alg, r);
}

// Brackets of an xi and an unrelated algebraic number can only be told apart
// by refinement; past this width the xi is dropped as a landmark.
Rational xi_cutoff() { return Rational(1, mpz_class(1) << 160); }

// Exact sign of x - y, or nullopt when an xi cannot be separated from y.
std::optional<int> compare_landmarks(Landmark& x, Landmark& y) {
  if (!x.is_xi && !y.is_xi) return compare(x.alg, y.alg);
  for (;;) {
    if (y.is_point()) return compare_to_rational(x, y.lo());
    if (x.is_point()) return -compare_to_rational(y, x.lo());
    if (x.hi() <= y.lo()) return -1;
    if (y.hi() <= x.lo()) return 1;
    if (x.width() < xi_cutoff() && y.width() < xi_cutoff()) return std::nullopt;
    x.refine();
    y.refine();
  }
}

// Keeps one representation of two equal landmarks: an exact point if either
// is one, otherwise a polynomial bracket over an xi, otherwise the higher priority.
void merge_into(Landmark& keep, Landmark& other) {
  auto names = keep.names;
  names.insert(names.end(), other.names.begin(), other.names.end());
  std::sort(names.begin(), names.end());
  const std::optional<QuadSurd> surd = keep.surd ? keep.surd : other.surd;
  auto rank = [](const Landmark& l) { return std::tuple(!l.is_point(), l.is_xi, l.priority()); };
  if (rank(other) < rank(keep)) keep = other;
  keep.surd = surd;
  keep.names = std::move(names);
}

// Inserts into an increasing list, merging equal values. Returns false when
// the landmark could not be placed (only possible for xi).
bool insert_landmark(std::vector<Landmark>& sorted, Landmark lm) {
  for (size_t i = 0; i < sorted.size(); ++i) {
    const auto s = compare_landmarks(lm, sorted[i]);
    if (!s) return false;
    if (*s == 0) {
      merge_into(sorted[i], lm);
      return true;
    }
    if (*s < 0) {
      sorted.insert(sorted.begin() + static_cast<long>(i), std::move(lm));
      return true;
    }
  }
  sorted.push_back(std::move(lm));
  return true;
}

struct Certified {
  UPoly f, g_prime;
  std::vector<UPoly> derivs;  // f', f'', f''', f''''
};

Certified certify_tools(const QuarticCoeffs& k) {
  Certified c;
  c.f = k.poly();
  UPoly d = c.f;
  for (int i = 0; i < 4; ++i) {
    d = d.derivative();
    c.derivs.push_back(d);
  }
  c.g_prime = squarefree_part(c.f).derivative();
  return c;
}

bool excludes_zero(const UPoly& p, const Rational& lo, const Rational& hi) {
  const auto [vlo, vhi] = p.eval_range(lo, hi);
  return vlo > 0 || vhi < 0;
}

// Separates neighbouring brackets and shrinks each until the quartic's sign
// is constant on it, or, at a root, until the root is the only one inside.
void certify(std::vector<Landmark>& lms, const Certified& tools) {
  for (size_t i = 0; i + 1 < lms.size(); ++i) {
    Landmark& l = lms[i];
    Landmark& r = lms[i + 1];
    while (l.hi() > r.lo()) {
      if (l.width() >= r.width()) l.refine();
      else r.refine();
    }
  }
  for (auto& l : lms) {
    if (l.is_point()) continue;
    const UPoly& p = l.fsign == 0 ? tools.g_prime : tools.f;
    while (!l.is_point() && !excludes_zero(p, l.lo(), l.hi())) l.refine();
  }
}

int root_multiplicity(Landmark& l, const Certified& tools) {
  if (l.is_xi) return 1;
  if (l.surd) {
    for (size_t k = 0; k < tools.derivs.size(); ++k)
      if (surd_sign(evaluate(tools.derivs[k], *l.surd)) != 0) return static_cast<int>(k) + 1;
  }
  for (size_t k = 0; k < tools.derivs.size(); ++k)
    if (l.alg.sign_of(tools.derivs[k]) != 0) return static_cast<int>(k) + 1;
  return 4;
}

ExtReal rational_end(const Rational& r) { return ExtReal::finite(QuadSurd(r)); }

RootEntry landmark_root(const Landmark& l, int sign) {
  RootEntry e;
  const std::string name = l.label();
  if (l.is_point()) {
    e.interval = Interval::point(QuadSurd(l.lo()), name);
  } else {
    e.interval = Interval::open(rational_end(l.lo()), rational_end(l.hi()), name, name);
  }
  e.lo_value = e.hi_value = l.approx();
  e.sign = sign;
  e.multiplicity = l.multiplicity;
  return e;
}

// Entry for the open gap between landmark i and i + 1 of lms; index -1 and
// lms.size() stand for the infinite ends.
RootEntry gap_entry(const std::vector<Landmark>& lms, long i, int sign, int multiplicity) {
  const double inf = std::numeric_limits<double>::infinity();
  const long n = static_cast<long>(lms.size());
  RootEntry e;
  const ExtReal lo = i < 0 ? ExtReal::neg_inf() : rational_end(lms[i].hi());
  const ExtReal hi = i + 1 >= n ? ExtReal::pos_inf() : rational_end(lms[i + 1].lo());
  e.interval = Interval::open(lo, hi, i < 0 ? "-inf" : lms[i].label(), i + 1 >= n ? "+inf" : lms[i + 1].label());
  e.lo_value = i < 0 ? -inf : lms[i].approx();
  e.hi_value = i + 1 >= n ? inf : lms[i + 1].approx();
  e.sign = sign;
  e.multiplicity = multiplicity;
  return e;
}

long zero_index(const std::vector<Landmark>& lms) {
  for (size_t i = 0; i < lms.size(); ++i)
    for (const auto& [p, n] : lms[i].names)
      if (p == kZero) return static_cast<long>(i);
  throw std::logic_error("zero landmark missing");
}

int gap_sign(long i, long zero) { return i + 1 <= zero ? -1 : 1; }

std::string xi_name(const std::string& mu_name, int which) {
  return "xi" + mu_name.substr(2) + "_" + std::to_string(which);
}

// Landmarks for the two xi of one stationary point.
std::vector<Landmark> xi_landmarks(const QuarticCoeffs& k, const StationaryPoint& p, int value_sign) {
  std::vector<Landmark> out;
  AlgebraicReal mu = p.x;
  if (mu.is_rational()) {
    const Rational m = mu.lo();
    const Rational B = k.a + 2 * m, C = k.b + 2 * k.a * m + 3 * m * m;
    if (B * B - 4 * C <= 0) return out;
    for (int which = 1; which <= 2; ++which) {
      const QuadSurd x = quadratic_root(B, C, which == 1);
      if (x == QuadSurd(m)) continue;  // the saddle itself
      Landmark l = surd_landmark(kXi, xi_name(p.name, which), x);
      l.alg.refine_to(default_root_width());
      l.fsign = value_sign;
      out.push_back(std::move(l));
    }
    return out;
  }
  const UPoly disc{k.a * k.a - 4 * k.b, -4 * k.a, -8};
  if (mu.sign_of(disc) <= 0) return out;
  for (int which = 1; which <= 2; ++which) {
    Landmark l;
    l.names = {{kXi, xi_name(p.name, which)}};
    l.is_xi = true;
    l.xi = make_xi(k.a, k.b, mu, which == 1);
    l.fsign = value_sign;
    out.push_back(std::move(l));
  }
  return out;
}

std::vector<int> counts_up_to(int guaranteed, int pairs, int cap) {
  std::vector<int> out;
  for (int j = 0; j <= pairs; ++j)
    if (guaranteed + 2 * j <= cap) out.push_back(guaranteed + 2 * j);
  if (out.empty()) out.push_back(guaranteed);
  return out;
}

bool meets(const Interval& bracket, const ExtReal& lo, const ExtReal& hi) {
  return compare(bracket.lo, hi) < 0 && compare(bracket.hi, lo) > 0;
}

}  // namespace

SpecialTangents special_tangents(const QuarticCoeffs& k, const StationaryProfile& profile) {
  SpecialTangents out;
  const UPoly f = k.poly();
  const UPoly minus_delta = f - UPoly{k.d};  // -delta as a function of mu
  for (const auto& p : profile.mu) {
    SpecialTangent t;
    t.mu_name = p.name;
    AlgebraicReal mu = p.x;
    t.value_sign = mu.sign_of(f);
    if (mu.is_rational()) {
      t.delta_lo = t.delta_hi = -minus_delta(mu.lo());
    } else {
      mu.refine_to(Rational(1, mpz_class(1) << 64));
      const auto [lo, hi] = minus_delta.eval_range(mu.lo(), mu.hi());
      t.delta_lo = -hi;
      t.delta_hi = -lo;
    }
    t.minus_delta = -Rational((t.delta_lo + t.delta_hi) / 2).get_d();
    for (auto& l : xi_landmarks(k, p, t.value_sign)) {
      XiPoint x;
      x.name = l.names.front().second;
      x.lo = l.lo();
      x.hi = l.hi();
      x.exact = l.surd;
      x.approx = l.approx();
      t.xi.push_back(std::move(x));
    }
    out.tangents.push_back(std::move(t));
  }
  return out;
}

int count_from_stationary_signs(const std::vector<PointKind>& kinds, const std::vector<int>& signs, bool quadruple) {
  if (quadruple) return signs.at(0) < 0 ? 2 : signs.at(0) == 0 ? 4 : 0;
  int total = 0;
  int prev = 1;
  for (size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] == 0) total += kinds[i] == PointKind::Saddle ? 3 : 2;
    if (prev * signs[i] < 0) ++total;
    prev = signs[i];
  }
  if (prev < 0) ++total;
  return total;
}

RootReport classify_cubic_tier(const QuarticCoeffs& k) {
  const Certified tools = certify_tools(k);
  const StationaryProfile prof = stationary_points(k);
  const LambdaSet lam = lambda_points(k);

  std::vector<Landmark> lms;
  std::vector<int> mu_signs;
  for (const auto& p : prof.mu) {
    Landmark l = algebraic_landmark(kMu, p.name, p.x);
    l.fsign = l.alg.sign_of(tools.f);
    mu_signs.push_back(l.fsign);
    insert_landmark(lms, std::move(l));
  }
  for (const auto& p : lam.lambdas) {
    Landmark l = algebraic_landmark(kLambda, p.name, p.x);
    l.fsign = sgn(k.d);
    insert_landmark(lms, std::move(l));
  }
  if (k.a * k.a - 4 * k.b >= 0) {
    for (int which = 1; which <= 2; ++which) {
      const QuadSurd r = quadratic_root(k.a, k.b, which == 1);
      Landmark l = surd_landmark(kMarker, which == 1 ? "rho1" : "rho2", r);
      l.fsign = surd_sign(QuadSurd(k.c) * r + QuadSurd(k.d));
      insert_landmark(lms, std::move(l));
    }
  }
  if (k.c != 0) {
    const Rational x = -k.d / k.c;
    Landmark l = surd_landmark(kRatio, "-d/c", QuadSurd(x));
    l.fsign = tools.f.sign_at(x);
    insert_landmark(lms, std::move(l));
  }
  {
    Landmark l = surd_landmark(kZero, "0", QuadSurd(0));
    l.fsign = sgn(k.d);
    insert_landmark(lms, std::move(l));
  }
  for (size_t i = 0; i < prof.mu.size(); ++i)
    for (auto& l : xi_landmarks(k, prof.mu[i], mu_signs[i])) insert_landmark(lms, std::move(l));

  for (auto& l : lms)
    if (l.fsign == 0) l.multiplicity = root_multiplicity(l, tools);
  certify(lms, tools);

  RootReport rep;
  rep.tier = Tier::Cubic;
  const long zero = zero_index(lms);
  const long n = static_cast<long>(lms.size());
  for (long i = -1; i < n; ++i) {
    if (i >= 0 && lms[i].fsign == 0) {
      const int s = i < zero ? -1 : i == zero ? 0 : 1;
      rep.roots.push_back(landmark_root(lms[i], s));
      rep.count += lms[i].multiplicity;
    }
    const int sl = i < 0 ? 1 : lms[i].fsign;
    const int sr = i + 1 >= n ? 1 : lms[i + 1].fsign;
    if (sl * sr < 0) {
      rep.roots.push_back(gap_entry(lms, i, gap_sign(i, zero), 1));
      rep.count += 1;
    }
  }

  // Independent recount from the stationary values alone.
  std::vector<size_t> order(prof.mu.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::vector<AlgebraicReal> xs;
  for (const auto& p : prof.mu) xs.push_back(p.x);
  std::sort(order.begin(), order.end(), [&](size_t x, size_t y) { return compare(xs[x], xs[y]) < 0; });
  std::vector<PointKind> kinds;
  std::vector<int> signs;
  for (size_t i : order) {
    kinds.push_back(prof.mu[i].kind);
    signs.push_back(mu_signs[i]);
  }
  if (count_from_stationary_signs(kinds, signs, prof.kind == StationaryKind::Quadruple) != rep.count)
    throw std::logic_error("landmark count disagrees with the stationary-value count for " + k.str());
  rep.possible_counts = {rep.count};
  return rep;
}

RootReport classify_quadratic_tier(const QuarticCoeffs& k) {
  const Certified tools = certify_tools(k);
  const MarkerSet ms = markers_for_regime(k);
  const auto et = eta_theta(k);
  const bool split_eta = et && !(et->eta1 == et->eta2);

  std::vector<Landmark> lms;
  auto add = [&](int priority, const std::string& name, const QuadSurd& x) {
    Landmark l = surd_landmark(priority, name, x);
    l.fsign = surd_sign(evaluate(tools.f, x));
    insert_landmark(lms, std::move(l));
  };
  for (const auto& p : ms.points) add(kMarker, p.name, p.value);
  if (split_eta) {
    add(kEta, "eta1", et->eta1);
    add(kEta, "eta2", et->eta2);
  }
  if (k.c != 0) add(kRatio, "-d/c", QuadSurd(-k.d / k.c));
  add(kZero, "0", QuadSurd(0));

  for (auto& l : lms)
    if (l.fsign == 0) l.multiplicity = root_multiplicity(l, tools);

  // Signs just right and just left of each landmark.
  std::vector<int> right, left;
  for (const auto& l : lms) {
    if (l.fsign != 0) {
      right.push_back(l.fsign);
      left.push_back(l.fsign);
    } else {
      const int s = surd_sign(evaluate(tools.derivs[l.multiplicity - 1], *l.surd));
      right.push_back(s);
      left.push_back(l.multiplicity % 2 == 0 ? s : -s);
    }
  }
  const auto brackets = stationary_brackets(k);
  certify(lms, tools);

  RootReport rep;
  rep.tier = Tier::Quadratic;
  const long zero = zero_index(lms);
  const long n = static_cast<long>(lms.size());
  int guaranteed = 0;
  for (long i = -1; i < n; ++i) {
    if (i >= 0 && lms[i].fsign == 0) {
      const int s = i < zero ? -1 : i == zero ? 0 : 1;
      rep.roots.push_back(landmark_root(lms[i], s));
      guaranteed += lms[i].multiplicity;
    }
    const int sl = i < 0 ? 1 : right[i];
    const int sr = i + 1 >= n ? 1 : left[i + 1];
    const bool zl = i >= 0 && lms[i].fsign == 0, zr = i + 1 < n && lms[i + 1].fsign == 0;
    if (sl != sr) {
      rep.roots.push_back(gap_entry(lms, i, gap_sign(i, zero), 1));
      ++guaranteed;
      continue;
    }
    if (zl || zr) continue;  // a strictly convex or concave piece has no room
    const ExtReal lo = i < 0 ? ExtReal::neg_inf() : ExtReal::finite(*lms[i].surd);
    const ExtReal hi = i + 1 >= n ? ExtReal::pos_inf() : ExtReal::finite(*lms[i + 1].surd);
    bool concave = false;
    if (split_eta && lo.is_finite() && hi.is_finite())
      concave = compare(lo.value, et->eta2) >= 0 && compare(hi.value, et->eta1) <= 0;
    if ((sl > 0) == concave) continue;  // positive and concave, or negative and convex
    bool extremum_inside = false;
    for (const auto& b : brackets)
      if (meets(b.interval, lo, hi)) extremum_inside = true;
    if (extremum_inside) rep.ambiguous_pairs.push_back(gap_entry(lms, i, gap_sign(i, zero), 2));
  }
  const int cap = first_discriminant(k.a, k.b, k.c) < 0 ? 2 : 4;
  rep.possible_counts = counts_up_to(guaranteed, static_cast<int>(rep.ambiguous_pairs.size()), cap);
  rep.count = rep.possible_counts.size() == 1 ? rep.possible_counts[0] : -1;
  return rep;
}

std::string roman(int n) {
  static const char* numerals[] = {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x"};
  if (n >= 1 && n <= 10) return numerals[n - 1];
  return std::to_string(n);
}

std::string CaseLabel::str() const {
  return std::to_string(row) + "." + std::to_string(column) + "(" + roman(quadratic_subcase) + ")";
}

std::string CaseLabel::cubic_str() const {
  return std::to_string(row) + "." + std::to_string(column) + "(" + roman(cubic_subcase) + ")";
}

CaseLabel case_label(const QuarticCoeffs& k) {
  CaseLabel lab;
  const Rational A = k.a * k.a / 4;
  struct Bound {
    Rational value;
    const char* name;
  };
  const Bound bounds[] = {{A, "a^2/4"},
                          {Rational(9, 8) * A, "(9/8)(a^2/4)"},
                          {Rational(4, 3) * A, "(4/3)(a^2/4)"},
                          {Rational(3, 2) * A, "(3/2)(a^2/4)"}};
  if (k.b <= 0) {
    lab.row = 1;
    if (k.b == 0) lab.ties.push_back("b=0");
  } else {
    lab.row = 6;
    for (int i = 0; i < 4; ++i) {
      if (k.b <= bounds[i].value) {
        lab.row = 2 + i;
        break;
      }
    }
  }
  for (const auto& bd : bounds)
    if (k.b == bd.value && k.b != 0) lab.ties.push_back(std::string("b=") + bd.name);

  int offset = 0;
  if (k.a > 0) offset = lab.row <= 4 ? 7 : lab.row == 5 ? 5 : 2;
  if (k.a == 0) lab.ties.push_back("a=0");

  std::vector<NamedSurd> seps;
  const ResolventChain ch = resolvent_chain(k);
  if (lab.row <= 5) seps = ch.entries;
  seps.push_back({"0", QuadSurd(0)});
  int below = 0;
  for (const auto& s : seps) {
    const int cmp = compare(QuadSurd(k.c), s.value);
    if (cmp > 0) ++below;
    if (cmp == 0) lab.ties.push_back("c=" + s.name);
  }
  lab.column = offset + 1 + below;
  if (is_quadruple_profile(k)) lab.ties.push_back("quadruple");

  // Subcases: 1 + the number of comparison points at or below -d.
  const StationaryProfile prof = stationary_points(k);
  const UPoly f = k.poly();
  lab.cubic_subcase = 1;
  for (const auto& p : prof.mu) {
    AlgebraicReal x = p.x;
    const int s = x.sign_of(f);  // sign of (-delta) - (-d)
    if (s <= 0) ++lab.cubic_subcase;
    if (s == 0) lab.ties.push_back("-d=-delta(" + p.name + ")");
  }
  if (k.d <= 0) ++lab.cubic_subcase;
  if (k.d == 0) lab.ties.push_back("-d=0");

  const MarkerSet ms = markers_for_regime(k);
  lab.quadratic_subcase = 1 + (k.d <= 0 ? 1 : 0);
  for (const auto& o : ms.ordinates) {
    const int s = compare(o.value, QuadSurd(-k.d));
    if (s <= 0) ++lab.quadratic_subcase;
    if (s == 0) lab.ties.push_back("-d=" + o.name);
  }
  return lab;
}

std::vector<NamedInterval> stationary_isolation(const QuarticCoeffs& k) { return stationary_brackets(k); }

Classification classify(const QuarticCoeffs& k) {
  Classification c;
  c.coeffs = k;
  c.label = case_label(k);
  c.cubic = classify_cubic_tier(k);
  c.quadratic = classify_quadratic_tier(k);
  c.stationary = stationary_points(k);
  c.tangents = special_tangents(k, c.stationary);
  c.lambdas = lambda_points(k);
  c.chain = resolvent_chain(k);
  c.markers = markers_for_regime(k);
  c.double_tangent = double_tangent(k);
  c.discriminants = cubic_discriminants(k);
  return c;
}

}  // namespace quartic
