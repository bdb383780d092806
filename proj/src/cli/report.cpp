#include "quartic/cli.hpp"

#include "quartic/oracle.hpp"
#include "quartic/resolvent.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace quartic::cli {

using nlohmann::ordered_json;

double Precision::operator()(double x) const {
  if (!std::isfinite(x)) return x;
  if (two_decimals) return std::round(x * 100) / 100 + 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

namespace {

ordered_json number(double x, Precision p) {
  if (std::isnan(x)) return nullptr;
  if (std::isinf(x)) return x > 0 ? "+inf" : "-inf";
  return p(x);
}

ordered_json surd(const QuadSurd& x, Precision p) {
  return {{"value", number(x.to_double(), p)}, {"exact", x.str()}};
}

ordered_json root_json(const RootEntry& e, Precision p) {
  return {{"lo", number(e.lo_value, p)},
          {"hi", number(e.hi_value, p)},
          {"lo_label", e.interval.lo_label},
          {"hi_label", e.interval.hi_label},
          {"lo_exact", e.interval.lo.str()},
          {"hi_exact", e.interval.hi.str()},
          {"lo_closed", e.interval.lo_closed},
          {"hi_closed", e.interval.hi_closed},
          {"sign", e.sign},
          {"multiplicity", e.multiplicity}};
}

ordered_json interval_json(const Interval& iv, Precision p) {
  return {{"lo", number(iv.lo.to_double(), p)},
          {"hi", number(iv.hi.to_double(), p)},
          {"lo_label", iv.lo_label},
          {"hi_label", iv.hi_label}};
}

ordered_json optional_surd(const std::optional<QuadSurd>& x, Precision p) {
  return x ? surd(*x, p) : ordered_json(nullptr);
}

}  // namespace

ordered_json classification_json(const Classification& cl, Precision p) {
  const QuarticCoeffs& k = cl.coeffs;
  ordered_json j;
  j["schema_version"] = 1;
  j["input"] = {{"a", to_string(k.a)}, {"b", to_string(k.b)}, {"c", to_string(k.c)}, {"d", to_string(k.d)}};
  j["case"] = {{"label", cl.label.str()},
               {"cubic_label", cl.label.cubic_str()},
               {"row", cl.label.row},
               {"column", cl.label.column},
               {"subcase", roman(cl.label.quadratic_subcase)},
               {"cubic_subcase", roman(cl.label.cubic_subcase)},
               {"ties", cl.label.ties}};

  ordered_json cubic_roots = ordered_json::array();
  for (const auto& e : cl.cubic.roots) cubic_roots.push_back(root_json(e, p));
  // count is with multiplicity; distinct_count is the number of root entries.
  j["cubic_tier"] = {{"count", cl.cubic.count}, {"distinct_count", cl.cubic.roots.size()}, {"roots", cubic_roots}};

  ordered_json guaranteed = ordered_json::array(), ambiguous = ordered_json::array();
  for (const auto& e : cl.quadratic.roots) guaranteed.push_back(root_json(e, p));
  for (const auto& e : cl.quadratic.ambiguous_pairs) ambiguous.push_back(root_json(e, p));
  j["quadratic_tier"] = {{"possible_counts", cl.quadratic.possible_counts},
                         {"count", cl.quadratic.count},
                         {"guaranteed", guaranteed},
                         {"ambiguous_pairs", ambiguous}};

  ordered_json points = ordered_json::array();
  for (const auto& m : cl.stationary.mu) {
    ordered_json pt = {{"name", m.name},
                       {"x", number(m.x.approx(), p)},
                       {"kind", point_kind_name(m.kind)},
                       {"exact", m.x.is_rational()},
                       {"bracket", {number(m.x.lo().get_d(), p), number(m.x.hi().get_d(), p)}}};
    for (const auto& b : cl.stationary.brackets)
      if (b.name == m.name) pt["isolation"] = interval_json(b.interval, p);
    points.push_back(pt);
  }
  j["stationary"] = {{"kind", stationary_kind_name(cl.stationary.kind)}, {"points", points}};

  ordered_json tangents = ordered_json::array();
  for (const auto& t : cl.tangents.tangents) {
    ordered_json xi = ordered_json::array();
    for (const auto& x : t.xi) xi.push_back({{"name", x.name}, {"x", number(x.approx, p)}});
    tangents.push_back(
        {{"mu", t.mu_name}, {"minus_delta", number(t.minus_delta, p)}, {"value_sign", t.value_sign}, {"xi", xi}});
  }
  j["special_tangents"] = tangents;

  ordered_json lambdas = ordered_json::array();
  for (const auto& l : cl.lambdas.lambdas)
    lambdas.push_back({{"name", l.name}, {"x", number(l.x.approx(), p)}, {"multiplicity", l.multiplicity}});
  j["lambdas"] = lambdas;

  const ResolventChain& ch = cl.chain;
  j["chain"] = {{"c2", optional_surd(ch.c2, p)},
                {"gamma2", optional_surd(ch.gamma2, p)},
                {"c0", surd(QuadSurd(ch.c0), p)},
                {"gamma1", optional_surd(ch.gamma1, p)},
                {"c1", optional_surd(ch.c1, p)},
                {"d0", surd(QuadSurd(ch.d0), p)},
                {"c_ties", ch.c_ties}};
  j["double_tangent"] = {{"alpha", optional_surd(cl.double_tangent.alpha, p)},
                         {"beta", optional_surd(cl.double_tangent.beta, p)}};

  if (const auto et = eta_theta(k)) {
    j["eta_theta"] = {{"eta1", surd(et->eta1, p)},
                      {"eta2", surd(et->eta2, p)},
                      {"theta1", surd(et->theta1, p)},
                      {"theta2", surd(et->theta2, p)}};
  } else {
    j["eta_theta"] = nullptr;
  }

  ordered_json markers = ordered_json::array(), ordinates = ordered_json::array();
  for (const auto& m : cl.markers.points) markers.push_back({{"name", m.name}, {"x", surd(m.value, p)}});
  for (const auto& m : cl.markers.ordinates) ordinates.push_back({{"name", m.name}, {"intercept", surd(m.value, p)}});
  j["markers"] = {{"regime", regime_name(cl.markers.regime)}, {"points", markers}, {"ordinates", ordinates}};

  j["discriminants"] = {{"delta1", to_string(cl.discriminants.delta1)}, {"delta2", to_string(cl.discriminants.delta2)}};
  return j;
}

SweepRow sweep_row(const QuarticCoeffs& k) {
  SweepRow r;
  r.coeffs = k;
  r.label = case_label(k);
  const RootReport cubic = classify_cubic_tier(k);
  const Verdict vc = verify_report(k, cubic);
  const Verdict vq = verify_report(k, classify_quadratic_tier(k));
  r.count = cubic.count;
  r.oracle_count = vc.oracle_count;
  r.pass = vc.pass && vq.pass;
  return r;
}

std::string csv_header() { return "a,b,c,d,row,column,subcase,count,oracle_count,verdict\n"; }

std::string csv_line(const SweepRow& r) {
  const QuarticCoeffs& k = r.coeffs;
  return to_string(k.a) + "," + to_string(k.b) + "," + to_string(k.c) + "," + to_string(k.d) + "," +
         std::to_string(r.label.row) + "," + std::to_string(r.label.column) + "," + roman(r.label.quadratic_subcase) +
         "," + std::to_string(r.count) + "," + std::to_string(r.oracle_count) + "," + (r.pass ? "pass" : "fail") + "\n";
}

}  // namespace quartic::cli
