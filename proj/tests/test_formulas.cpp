#include "tessgrowth/formulas.hpp"

#include <doctest.h>

#include <cmath>

using namespace tg;

static CyclicSequence S(std::vector<int> v) { return CyclicSequence(v); }

TEST_CASE("edge-homogeneous growth") {
  EdgeSymbol a{3, 3, 7, 7}, b{3, 7, 4, 4}, c{4, 4, 4, 5};
  CHECK(edge_t(a) == 5);
  CHECK(edge_homogeneous_growth(a).value == doctest::Approx(2.61803).epsilon(1e-5));
  CHECK(edge_t(b) == 6);
  CHECK(edge_homogeneous_growth(b).value == doctest::Approx(2.61803).epsilon(1e-5));
  CHECK(edge_t(c) == 5);
  CHECK(edge_homogeneous_growth(c).value == doctest::Approx(2.61803).epsilon(1e-5));
  CHECK_FALSE(edge_symbol_exists(EdgeSymbol{3, 4, 5, 5}));
  CHECK_THROWS_AS(edge_homogeneous_growth(EdgeSymbol{3, 4, 5, 5}), std::invalid_argument);
}

TEST_CASE("closed forms") {
  auto g = closed_form_gamma(S({14, 14, 3}));
  REQUIRE(g);
  CHECK(g->value == doctest::Approx((6 + std::sqrt(20.0)) / 4));
  g = closed_form_gamma(S({3, 3, 3, 3, 7}));
  REQUIRE(g);
  CHECK(truncated4(g->value) == "1.7553");
  g = closed_form_gamma(S({5, 5, 5, 5}));
  REQUIRE(g);
  CHECK(g->value == doctest::Approx(2 + std::sqrt(3.0)));
  g = closed_form_gamma(S({4, 5, 4, 5}));
  REQUIRE(g);
  CHECK(g->value == doctest::Approx((3 + std::sqrt(5.0)) / 2));
  CHECK_FALSE(closed_form_gamma(S({6, 8, 10})));  // lower bound only
  // length >= 7 falls back to g(t)
  g = closed_form_gamma(S({3, 3, 3, 3, 3, 3, 3}));
  REQUIRE(g);
  CHECK(g->value == doctest::Approx(2.61803).epsilon(1e-5));
}

TEST_CASE("least-growth table rows") {
  auto rows = least_growth_table();
  CHECK(rows.size() == 36);
  int bold = 0;
  for (const auto& r : rows) {
    bold += r.bold;
    if (r.family == "[p,q,r]") {
      CHECK(r.minimal == S({6, 8, 10}));
      CHECK(r.computed_str == "3.4789");
    }
    if (r.family == "[p,q,r,s,t]") {
      CHECK(r.minimal == S({4, 6, 10, 12, 8}));
      CHECK(r.computed_str == "14.5753");
    }
    if (r.family == "[4,p,q]") {
      CHECK(r.minimal == S({4, 6, 14}));
      CHECK(r.computed_str == "1.6180");
    }
  }
  CHECK(bold == 2);
}

TEST_CASE("consistency sweeps") {
  for (const char* id : {"[p,p,q]", "[3,p,4,p]", "[p,q,p,r]"}) {
    auto r = verify_consistency(id, 20);
    CHECK_MESSAGE(r.ok(), id);
    CHECK(r.tested == 20);
  }
  auto b = admissible_bindings("[p,p,q]", 5);
  REQUIRE(b.size() == 5);
  for (const auto& x : b) CHECK(x.at('p') % 2 == 0);
}

TEST_CASE("minimal tables") {
  auto t5 = pqrst_minimal_table();
  CHECK(t5.size() == 12);
  auto t6 = pqrstu_minimal_table();
  CHECK(t6.size() == 60);
  bool found = false;
  for (const auto& r : t6)
    if (r.starred) {
      found = true;
      CHECK(r.sequence == S({4, 6, 10, 14, 12, 8}));
      CHECK(truncated4(r.computed) == "23.9963");
    }
  CHECK(found);
}
