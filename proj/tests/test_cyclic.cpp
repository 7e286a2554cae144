#include "tessgrowth/cyclic.hpp"

#include <doctest.h>

using namespace tg;

static CyclicSequence S(std::vector<int> v) { return CyclicSequence(v); }

TEST_CASE("canonical form is the least traversal") {
  CHECK(S({6, 8, 12, 4}).terms() == std::vector<int>{4, 6, 8, 12});
  CHECK(S({5, 4, 5, 4}).terms() == std::vector<int>{4, 5, 4, 5});
  CHECK(S({7, 7, 7}).terms() == std::vector<int>{7, 7, 7});
  // reflection matters: 4,10,8,6 reads backwards as 4,6,8,10
  CHECK(S({4, 10, 8, 6}).terms() == std::vector<int>{4, 6, 8, 10});
  CHECK(traversals({1, 2, 3}).size() == 6);
}

TEST_CASE("canonicalize rejects bad words") {
  CHECK_THROWS_AS(S({}), std::invalid_argument);
  CHECK_THROWS_AS(S({4, 4}), std::invalid_argument);
  CHECK_THROWS_AS(S({4, 2, 5}), std::invalid_argument);
}

TEST_CASE("equivalence") {
  CHECK(equivalent(S({4, 5, 4, 5}), S({5, 4, 5, 4})));
  CHECK_FALSE(equivalent(S({4, 6, 8, 10}), S({4, 6, 10, 8})));
  CHECK(equivalent(S({3, 4, 7, 4}), S({4, 7, 4, 3})));
}

TEST_CASE("domination order") {
  CHECK(leq(S({4, 6, 8, 10}), S({6, 8, 12, 4})) == Order::Less);
  // 10,8,12,4 is a cyclic subsequence of [10,8,12,6,4] and dominates 6,8,12,4
  // termwise, so this pair is comparable under the definition.
  CHECK(leq(S({6, 8, 12, 4}), S({10, 8, 12, 6, 4})) == Order::Less);
  CHECK(leq(S({4, 6, 8, 10}), S({4, 6, 10, 8})) == Order::Incomparable);
  CHECK(leq(S({4, 6, 10, 8}), S({4, 8, 6, 10})) == Order::Incomparable);
  CHECK(leq(S({4, 6, 8, 12}), S({4, 6, 8, 10, 5})) == Order::Incomparable);
  CHECK(leq(S({4, 6, 8, 10}), S({10, 8, 12, 6, 4})) == Order::Less);
  CHECK(leq(S({6, 8, 12, 4}), S({4, 6, 8, 10})) == Order::Greater);
  CHECK(leq(S({5, 4, 5, 4}), S({4, 5, 4, 5})) == Order::Equal);
}

TEST_CASE("angle excess and growth class") {
  CHECK(angle_excess(S({4, 4, 4, 4})) == 0);
  CHECK(angle_excess(S({4, 6, 14})) == Rational(1, 42));
  CHECK(angle_excess(S({3, 3, 3, 3, 3, 3, 3})) == Rational(1, 3));
  CHECK(angle_excess(S({3, 3, 3})) == -1);
  CHECK(growth_class(S({3, 3, 3})) == GrowthClass::Finite);
  CHECK(growth_class(S({6, 6, 6})) == GrowthClass::Euclidean);
  CHECK(growth_class(S({7, 7, 7})) == GrowthClass::Hyperbolic);
}

TEST_CASE("parse") {
  CHECK(parse_sequence("[4, 6,14]") == std::vector<int>{4, 6, 14});
  CHECK_THROWS_AS(parse_sequence("4,6,14"), std::invalid_argument);
  CHECK_THROWS_AS(parse_sequence("[4,x,14]"), std::invalid_argument);
  CHECK(S(parse_sequence("[14,4,6]")).str() == "[4,6,14]");
}
