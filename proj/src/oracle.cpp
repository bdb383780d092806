#include "quartic/oracle.hpp"

#include <sstream>

namespace quartic {

namespace {

int sign_at(const UPoly& p, const ExtReal& x) {
  if (p.is_zero()) return 0;
  if (x.is_finite()) return x.value.is_rational() ? p.sign_at(x.value.u()) : surd_sign(evaluate(p, x.value));
  const int lead = sgn(p.lead());
  if (x.kind == ExtReal::Kind::PosInf || p.degree() % 2 == 0) return lead;
  return -lead;
}

bool is_root(const SturmChain& chain, const ExtReal& x) { return x.is_finite() && sign_at(chain.poly, x) == 0; }

// Roots in (lo, hi] of a squarefree p. Variations are right-continuous at a
// root, so the difference needs no special case there.
int count_half_open(const SturmSequence& seq, const ExtReal& lo, const ExtReal& hi) {
  return sign_variations(seq, lo) - sign_variations(seq, hi);
}

int adjusted(const SturmSequence& seq, const UPoly& p, const Interval& iv) {
  if (compare(iv.lo, iv.hi) > 0) return 0;
  auto root_at = [&](const ExtReal& x) { return x.is_finite() && sign_at(p, x) == 0; };
  if (iv.is_point()) return iv.lo_closed && iv.hi_closed && root_at(iv.lo) ? 1 : 0;
  int n = count_half_open(seq, iv.lo, iv.hi);
  if (root_at(iv.hi) && !iv.hi_closed) --n;
  if (root_at(iv.lo) && iv.lo_closed) ++n;
  return n;
}

std::string show(const Interval& iv) {
  std::ostringstream os;
  os << (iv.lo_closed ? "[" : "(") << iv.lo.str() << ", " << iv.hi.str() << (iv.hi_closed ? "]" : ")");
  return os.str();
}

}  // namespace

SturmSequence sturm_sequence(const UPoly& p) {
  SturmSequence s;
  if (p.is_zero()) return s;
  s.polys.push_back(p);
  UPoly next = p.derivative();
  while (!next.is_zero()) {
    s.polys.push_back(next);
    const UPoly& a = s.polys[s.polys.size() - 2];
    next = -(a % s.polys.back());
  }
  return s;
}

SturmChain sturm_chain_of(const UPoly& p) {
  SturmChain c;
  c.poly = p;
  c.gcd_with_derivative = gcd(p, p.derivative());
  const UPoly sq = p / c.gcd_with_derivative;
  c.distinct = sturm_sequence(sq);

  // Yun's squarefree decomposition.
  UPoly cur = sq;
  UPoly d = p.derivative() / c.gcd_with_derivative - cur.derivative();
  for (int i = 1; cur.degree() > 0; ++i) {
    const UPoly a = gcd(cur, d);
    if (a.degree() > 0) c.factors.push_back({i, sturm_sequence(a)});
    cur = cur / a;
    d = d / a - cur.derivative();
  }
  return c;
}

SturmChain sturm_chain(const QuarticCoeffs& k) { return sturm_chain_of(k.poly()); }

int sign_variations(const SturmSequence& seq, const ExtReal& x) {
  int count = 0, prev = 0;
  for (const auto& p : seq.polys) {
    const int s = sign_at(p, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

int count_roots_in(const SturmChain& chain, const Interval& iv) {
  if (is_root(chain, iv.lo)) throw EndpointIsRoot(iv.lo.str());
  if (is_root(chain, iv.hi)) throw EndpointIsRoot(iv.hi.str());
  if (compare(iv.lo, iv.hi) >= 0) return 0;
  return count_half_open(chain.distinct, iv.lo, iv.hi);
}

int count_roots_adjusted(const SturmChain& chain, const Interval& iv) { return adjusted(chain.distinct, chain.poly, iv); }

int count_with_multiplicity(const SturmChain& chain, const Interval& iv) {
  int n = 0;
  for (const auto& f : chain.factors) n += f.multiplicity * adjusted(f.seq, f.seq.polys.front(), iv);
  return n;
}

int total_distinct(const SturmChain& chain) {
  return count_half_open(chain.distinct, ExtReal::neg_inf(), ExtReal::pos_inf());
}

int total_with_multiplicity(const SturmChain& chain) {
  int n = 0;
  for (const auto& f : chain.factors)
    n += f.multiplicity * count_half_open(f.seq, ExtReal::neg_inf(), ExtReal::pos_inf());
  return n;
}

Verdict verify_report(const QuarticCoeffs& k, const RootReport& rep) {
  Verdict v;
  const SturmChain chain = sturm_chain(k);
  v.oracle_count = total_with_multiplicity(chain);
  auto fail = [&](std::string msg) { v.violations.push_back(std::move(msg)); };

  auto check_sign = [&](const RootEntry& e) {
    const Interval& iv = e.interval;
    const ExtReal zero = ExtReal::finite(QuadSurd(0));
    bool ok = true;
    if (e.sign < 0) ok = compare(iv.hi, zero) <= 0;
    if (e.sign > 0) ok = compare(iv.lo, zero) >= 0;
    if (e.sign == 0) ok = iv.is_point() && compare(iv.lo, zero) == 0;
    if (!ok) fail("interval " + show(iv) + " has the wrong sign label");
  };

  int listed = 0;
  for (const auto& e : rep.roots) {
    const int distinct = count_roots_adjusted(chain, e.interval);
    const int weighted = count_with_multiplicity(chain, e.interval);
    if (distinct != 1) fail("interval " + show(e.interval) + " holds " + std::to_string(distinct) + " roots");
    else if (weighted != e.multiplicity)
      fail("interval " + show(e.interval) + " has multiplicity " + std::to_string(weighted) + ", reported " +
           std::to_string(e.multiplicity));
    check_sign(e);
    listed += e.multiplicity;
  }
  for (const auto& e : rep.ambiguous_pairs) {
    const int weighted = count_with_multiplicity(chain, e.interval);
    if (weighted != 0 && weighted != 2)
      fail("ambiguous interval " + show(e.interval) + " holds " + std::to_string(weighted) + " roots");
  }

  bool possible = false;
  for (int c : rep.possible_counts) possible = possible || c == v.oracle_count;
  if (!possible) {
    std::string set;
    for (int c : rep.possible_counts) set += (set.empty() ? "" : ",") + std::to_string(c);
    fail("possible counts {" + set + "} miss the true count " + std::to_string(v.oracle_count));
  }
  if (rep.tier == Tier::Cubic) {
    if (rep.count != v.oracle_count)
      fail("count " + std::to_string(rep.count) + " but the oracle finds " + std::to_string(v.oracle_count));
    if (listed != v.oracle_count)
      fail("intervals account for " + std::to_string(listed) + " of " + std::to_string(v.oracle_count) + " roots");
  }
  v.pass = v.violations.empty();
  return v;
}

}  // namespace quartic
