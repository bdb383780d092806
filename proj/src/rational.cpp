#include "quartic/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <regex>

namespace quartic {

std::optional<Rational> parse_rational(std::string_view text) {
  static const std::regex fraction(R"(^\s*([+-]?\d+)\s*/\s*(\d+)\s*$)");
  static const std::regex decimal(R"(^\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*$)");
  const std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, fraction)) {
    mpz_class num(m[1].str()[0] == '+' ? m[1].str().substr(1) : m[1].str());
    mpz_class den(m[2].str());
    if (den == 0) return std::nullopt;
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (!std::regex_match(s, m, decimal)) return std::nullopt;
  const std::string ipart = m[2].str();
  const std::string fpart = m[3].str();
  if (ipart.empty() && fpart.empty()) return std::nullopt;
  if (m[4].matched && m[4].str().size() > 6) return std::nullopt;
  mpz_class digits(ipart + fpart == "" ? "0" : ipart + fpart);
  long exponent = -static_cast<long>(fpart.size());
  if (m[4].matched) exponent += std::stol(m[4].str());
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
  Rational r = exponent >= 0 ? Rational(digits * scale) : Rational(digits, scale);
  r.canonicalize();
  if (m[1].str() == "-") r = -r;
  return r;
}

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

double to_double(const Rational& x) { return x.get_d(); }

Rational floor_of(const Rational& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Rational(q);
}

Rational ceil_of(const Rational& x) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Rational(q);
}

Rational from_double(double x) {
  Rational r(x);
  r.canonicalize();
  return r;
}

Rational sqrt_floor(const Rational& x, const mpz_class& scale) {
  if (x <= 0) return 0;
  const mpz_class scaled = floor_of(x * scale * scale).get_num();
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  Rational r(root, scale);
  r.canonicalize();
  return r;
}

}  // namespace quartic
