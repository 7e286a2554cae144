// Characteristic polynomials, dominant roots and corona series.
#pragma once

#include "tessgrowth/cyclic.hpp"
#include "tessgrowth/matrix.hpp"
#include "tessgrowth/rational.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace tg {

struct RationalPolynomial {
  std::vector<Rational> c;  // c[i] is the coefficient of z^i

  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);

  int degree() const { return static_cast<int>(c.size()) - 1; }
  void trim();
  Rational eval(const Rational& z) const;
  std::complex<double> eval(std::complex<double> z) const;
  RationalPolynomial monic() const;
  std::string str() const;

  bool operator==(const RationalPolynomial& o) const { return c == o.c; }
  RationalPolynomial operator*(const RationalPolynomial& o) const;
  RationalPolynomial operator*(const Rational& s) const;
};

// Build from integer coefficients listed from the highest power down.
RationalPolynomial poly_desc(std::initializer_list<Rational> highest_first);

enum class RateSource { Spectral, ClosedForm, EdgeHomogeneous, SimulatorEstimate };
const char* to_string(RateSource s);

struct GrowthRate {
  double value = 0;
  Rational lo, hi;        // lo <= value <= hi
  RateSource source = RateSource::Spectral;
  bool certified = false;  // interval backed by exact sign evaluation
};

// det(zI - M), exact, via Faddeev-LeVerrier.
RationalPolynomial char_poly(const RationalMatrix& m);

// All complex roots (Aberth iteration).  Throws std::runtime_error when the
// iteration does not settle within the cap.
std::vector<std::complex<double>> roots(const RationalPolynomial& p);

GrowthRate max_modulus_root(const RationalPolynomial& p);

// Closed form for the largest root of z^4 - a z^3 - b z^2 - a z + 1.
GrowthRate palindromic_quartic_root(const Rational& a, const Rational& b);
// The uncorrected radicand variant, kept only for side-by-side diagnostics.
double palindromic_quartic_printed(double a, double b);

// |F_n| = j . M^{n-1} v1 for n = 1..N.  Empty weights mean j = (1,...,1).
std::vector<Rational> corona_series(const RationalMatrix& m, const std::vector<Rational>& v1, int n,
                                    const std::vector<Rational>& weights = {});
// Same coefficients read off phi(z) = z j (I - zM)^{-1} v1 = P(z)/Q(z), with
// Q(z) = det(I - zM) and P built from the Faddeev-LeVerrier adjugate terms;
// no matrix powers involved.
std::vector<Rational> corona_series_ogf(const RationalMatrix& m, const std::vector<Rational>& v1, int n,
                                        const std::vector<Rational>& weights = {});

// Squarefree part p / gcd(p, p'), monic.
RationalPolynomial squarefree(const RationalPolynomial& p);

// Growth rate of a catalogued (or all->=4 monomorphic, variant "block")
// sequence: catalog matrix -> char_poly -> max_modulus_root.
GrowthRate growth_rate(const CyclicSequence& s, const std::string& variant = "");

// Truncate (not round) to the given number of decimals.
double truncate_decimals(double x, int decimals);
std::string truncated_string(double x, int decimals);

}  // namespace tg
