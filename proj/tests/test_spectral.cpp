#include "tessgrowth/spectral.hpp"
#include "tessgrowth/transition.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace tg;

static CyclicSequence S(std::vector<int> v) { return CyclicSequence(v); }

TEST_CASE("characteristic polynomials of M1 and M2") {
  auto f1 = char_poly(catalog_matrix(S({4, 4, 6, 8}), "T1").matrix.m);
  auto want1 = poly_desc({1, -1}) * poly_desc({1, 1}) * poly_desc({1, 3, 1}) * poly_desc({1, -3, -4, -3, 1});
  CHECK(f1 == want1);

  auto f2 = char_poly(catalog_matrix(S({4, 4, 6, 8}), "T2").matrix.m);
  auto want2 = poly_desc({1, -1}) * poly_desc({1, -1}) * poly_desc({1, 2, -15, -40, -15, 2, 1});
  CHECK(f2 == want2);

  auto r1 = max_modulus_root(f1), r2 = max_modulus_root(f2);
  CHECK(r1.value == doctest::Approx(4.13016).epsilon(1e-6));
  CHECK(r2.value == doctest::Approx(4.14659).epsilon(1e-6));
  CHECK(r1.certified);
  CHECK(r1.lo <= from_double(r1.value));
  CHECK(from_double(r1.value) <= r1.hi);
}

TEST_CASE("[3,3,5,3,5] cubic") {
  auto f = char_poly(catalog_matrix(S({3, 3, 5, 3, 5})).matrix.m);
  auto want = (poly_desc({2, -1}) * poly_desc({1, -3, 1})) * Rational(1, 2);
  CHECK(f == want);
}

TEST_CASE("dominant roots") {
  auto r = max_modulus_root(poly_desc({1, -1, -1, -1, 1}));
  CHECK(r.value == doctest::Approx(1.72208).epsilon(1e-5));
  CHECK(r.hi - r.lo < Rational(1, 1000000000));
  // negative dominant root
  auto n = max_modulus_root(poly_desc({1, 3, -1}));
  // growth rates are moduli; the interval brackets the modulus
  CHECK(n.value == doctest::Approx((3 + std::sqrt(13.0)) / 2));
  CHECK(n.certified);
  CHECK(n.lo > 0);
}

TEST_CASE("palindromic quartic closed form") {
  CHECK(palindromic_quartic_root(1, 1).value == doctest::Approx(1.72208).epsilon(1e-5));
  // [3,6,4,6]: a = p-3, b = (p-8)/2 with p = 6
  CHECK(palindromic_quartic_root(3, -1).value == doctest::Approx(2.96557).epsilon(1e-5));
  // numeric root of z^4 - z^3 - 9z^2 - z + 1
  CHECK(palindromic_quartic_root(1, 9).value == doctest::Approx(3.5743292).epsilon(1e-7));

  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(0.01, 20);
  for (int i = 0; i < 200; ++i) {
    Rational a = from_double(u(rng)), b = from_double(u(rng));
    double closed = palindromic_quartic_root(a, b).value;
    double numeric = max_modulus_root(poly_desc({1, -a, -b, -a, 1})).value;
    CHECK(std::fabs(closed - numeric) < 1e-10);
  }
  // small a, b: every root on the unit circle
  CHECK(palindromic_quartic_root(Rational(1, 2), Rational(1, 3)).value == 1);
  CHECK(max_modulus_root(poly_desc({1, Rational(-1, 2), Rational(-1, 3), Rational(-1, 2), 1})).value ==
        doctest::Approx(1).epsilon(1e-9));
  // the uncorrected radicand does not give the root
  CHECK(std::fabs(palindromic_quartic_printed(1, 1) - 1.72208) > 1e-3);
}

TEST_CASE("corona series") {
  auto m1 = catalog_matrix(S({4, 4, 6, 8}), "T1");
  auto s1 = corona_series(m1.matrix.m, m1.v1, 5, m1.matrix.weights);
  CHECK(s1 == std::vector<Rational>{4, 30, 110, 494, 1938});
  auto m2 = catalog_matrix(S({4, 4, 6, 8}), "T2");
  auto s2 = corona_series(m2.matrix.m, m2.v1, 5, m2.matrix.weights);
  CHECK(s2 == std::vector<Rational>{4, 28, 108, 468, 1900});
  CHECK(corona_series_ogf(m1.matrix.m, m1.v1, 12, m1.matrix.weights) ==
        corona_series(m1.matrix.m, m1.v1, 12, m1.matrix.weights));
}

TEST_CASE("growth rates") {
  CHECK(growth_rate(S({7, 7, 7})).value == doctest::Approx(2.61803).epsilon(1e-5));
  const double phi = (1 + std::sqrt(5.0)) / 2;
  CHECK(std::fabs(growth_rate(S({4, 6, 14})).value - phi) < 1e-9);
  CHECK(std::fabs(growth_rate(S({3, 4, 7, 4})).value - phi) < 1e-9);
  CHECK(growth_rate(S({4, 6, 14})).source == RateSource::Spectral);
}

TEST_CASE("truncation") {
  CHECK(truncated_string(1.61809, 4) == "1.6180");
  CHECK(truncated_string(2.99999, 4) == "2.9999");
  CHECK(truncate_decimals(3.47899, 4) == doctest::Approx(3.4789));
}
