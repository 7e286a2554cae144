#include "tessgrowth/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace tg {

std::string to_string(const Rational& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  Integer n = numerator(q), d = denominator(q);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer n(text.substr(0, slash)), d(text.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator");
    return Rational(n, d);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational: " + text);
  }
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite double");
  int exp = 0;
  double m = std::frexp(x, &exp);
  // 53 bits of mantissa, scaled to an integer.
  auto mant = static_cast<long long>(std::ldexp(m, 53));
  exp -= 53;
  Rational r(mant);
  Integer two = 2;
  if (exp > 0) r *= Rational(boost::multiprecision::pow(two, exp));
  if (exp < 0) r /= Rational(boost::multiprecision::pow(two, -exp));
  return r;
}

int sign(const Rational& q) { return q.sign(); }

}  // namespace tg
