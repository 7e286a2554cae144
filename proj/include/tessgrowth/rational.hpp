// Exact arithmetic helpers shared by every module.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace tg {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "n" or "n/d", reduced, sign on the numerator.
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

double to_double(const Rational& q);
// Exact dyadic-ish rational nearest to x (x must be finite).
Rational from_double(double x);

int sign(const Rational& q);

}  // namespace tg
