#include "tessgrowth/spectral.hpp"
#include "tessgrowth/transition.hpp"

#include <doctest.h>

using namespace tg;

static CyclicSequence S(std::vector<int> v) { return CyclicSequence(v); }

static Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational t = 0;
  for (size_t i = 0; i < a.size(); ++i) t += a[i] * b[i];
  return t;
}

TEST_CASE("offspring counts") {
  CHECK(offspring_counts(S({5, 5, 5, 5, 5}), FaceKind::Wedge, 1).omega == 8);
  CHECK(offspring_counts(S({5, 5, 5, 5, 5}), FaceKind::Brick, 1).omega == 5);
  CHECK(offspring_counts(S({4, 4, 4, 4}), FaceKind::Wedge, 1).omega == 3);
  CHECK_THROWS_AS(offspring_counts(S({4, 4, 4, 4}), FaceKind::NotchedBrick, 1), std::invalid_argument);
}

TEST_CASE("block matrix columns sum to the offspring counts") {
  for (auto v : {std::vector<int>{5, 5, 5, 5, 5}, {4, 6, 8, 10}, {4, 5, 4, 6}, {4, 4, 4, 4, 4, 4}}) {
    auto s = S(v);
    auto t = block_matrix_g44(s);
    const int k = s.length();
    REQUIRE(t.size() == 2 * k);
    for (int col = 0; col < 2 * k; ++col) {
      const auto& f = t.labels[col];
      CHECK(t.m.column_sum(col) == offspring_counts(s, f.kind, f.index).omega);
    }
  }
}

TEST_CASE("block matrix entries") {
  auto a = block_matrix_g44(S({5, 5, 5, 5}));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int d = ((j - i) % 4 + 4) % 4;
      CHECK(a.m(i, j) == (d == 0 ? Rational(0) : d % 2 ? Rational(1, 2) : Rational(2)));
    }
  CHECK(block_matrix_g44(S({4, 5, 4, 5})).m(0, 1) == 0);  // (p_0 - 4)/2
  CHECK(block_matrix_g44(S({4, 5, 4, 5})).m(1, 2) == Rational(1, 2));
  auto f = block_matrix_g44(S({5, 5, 5, 5, 5}));
  for (int c = 0; c < 5; ++c) CHECK(f.m.column_sum(c) == 8);
  // brick window {i-3..i} leaves a single term outside: 5 - 10 + 5 + 5
  for (int c = 5; c < 10; ++c) CHECK(f.m.column_sum(c) == 5);
  CHECK_THROWS_AS(block_matrix_g44(S({3, 4, 7, 4})), std::invalid_argument);
}

TEST_CASE("[4,6,14] matrix") {
  auto cm = catalog_matrix(S({4, 6, 14}));
  RationalMatrix want{{0, 1, -1, 0}, {5, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}};
  CHECK(cm.matrix.m == want);
}

TEST_CASE("[4,4,6,8] matrices") {
  CHECK_THROWS_AS(catalog_matrix(S({4, 4, 6, 8})), std::invalid_argument);
  auto m1 = catalog_matrix(S({4, 4, 6, 8}), "T1");
  auto m2 = catalog_matrix(S({4, 4, 6, 8}), "T2");
  REQUIRE(m1.matrix.size() == 8);
  CHECK(m1.matrix.m(3, 1) == 5);
  CHECK(m1.matrix.m(0, 3) == 1);
  int changed = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) changed += m1.matrix.m(i, j) != m2.matrix.m(i, j);
  CHECK(changed > 0);
  CHECK(changed <= 4);
  CHECK(dot(m1.matrix.weights, m1.v1) == 4);
  CHECK(dot(m2.matrix.weights, m2.v1) == 4);
}

TEST_CASE("[3,3,5,3,5] matrix") {
  auto cm = catalog_matrix(S({3, 3, 5, 3, 5}));
  const int p = 5;
  RationalMatrix want{{p - 3, Rational(p - 4, 2), Rational(p - 4, 2)}, {1, 1, 0}, {1, Rational(1, 2), Rational(1, 2)}};
  CHECK(cm.matrix.m == want);
}

TEST_CASE("first distributions") {
  auto v = first_distribution(S({7, 7, 7}), 7);
  auto cm = catalog_matrix(S({7, 7, 7}));
  CHECK(dot(cm.matrix.weights, v) == 7);

  // halved [p,p,3] system with p = 16: (2,4) . (8,0) = 16
  Bindings b{{'p', 16}};
  auto t = template_matrix("[p,p,3]", b);
  auto v1 = template_v1("[p,p,3]", b, 16);
  REQUIRE(v1);
  CHECK(*v1 == std::vector<Rational>{8, 0});
  CHECK(dot(t.weights, *v1) == 16);
  CHECK(t.weights == std::vector<Rational>{2, 4});
}

TEST_CASE("edge recurrences") {
  CHECK(edge_homogeneous(S({7, 7, 7})));
  CHECK(edge_homogeneous(S({4, 5, 4, 5})));
  CHECK_FALSE(edge_homogeneous(S({4, 6, 14})));
  CHECK(edge_parameter(S({7, 7, 7})) == 5);
  auto t = edge_matrix(S({3, 7, 3, 7}));
  CHECK(t.m(0, 0) == 3);  // t - 3 for <3,7;4,4>
}

TEST_CASE("expressions") {
  Bindings b{{'p', 6}, {'q', 7}};
  CHECK(eval_expression("3p-10", b) == 8);
  CHECK(eval_expression("(p-4)(q-4)", b) == 6);
  CHECK(eval_expression("(p-4)/4", b) == Rational(1, 2));
}

TEST_CASE("corona positivity") {
  auto cm = catalog_matrix(S({4, 6, 14}));
  CHECK(first_nonpositive_corona(cm.matrix, cm.v1, 12) == 0);
}
