#include "tessgrowth/classification.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>

using namespace tg;

static CyclicSequence S(std::vector<int> v) { return CyclicSequence(v); }

TEST_CASE("realizability by parity") {
  CHECK(realizability_check(S({5, 5, 6})) == Realizability::ParityViolation);
  CHECK(realizability_check(S({6, 8, 10})) == Realizability::Ok);
  CHECK(realizability_check(S({5, 4, 5, 6, 5, 8})) == Realizability::Ok);
  // 3-heavy sequences must not be read as a letter family with p = 3
  CHECK(realizability_check(S({3, 3, 3, 3, 7})) == Realizability::Ok);
  CHECK(realizability_check(S({3, 3, 5, 3, 5})) == Realizability::Ok);
}

TEST_CASE("family matching") {
  auto m = match_pattern(S({4, 6, 14}));
  REQUIRE(m);
  CHECK(m->row->pattern.id == "[4,p,q]");
  CHECK(m->bindings.at('p') == 6);
  CHECK(m->bindings.at('q') == 14);

  m = match_pattern(S({3, 4, 7, 4}));
  REQUIRE(m);
  CHECK(m->row->pattern.id == "[3,p,q,p]");
  CHECK(m->bindings.at('p') == 4);
  CHECK(m->bindings.at('q') == 7);

  m = match_pattern(S({5, 5, 5, 5, 5}));
  REQUIRE(m);
  CHECK(m->row->pattern.id == "[p,p,p,p,p]");
  CHECK(m->bindings.at('p') == 5);
}

TEST_CASE("classify verdicts") {
  auto c = classify(S({7, 7, 7}));
  CHECK(c.morphism == Morphism::Monomorphic);
  CHECK(c.concentricity == Concentricity::UniformlyConcentric);

  CHECK(classify(S({4, 4, 6, 8})).morphism == Morphism::Polymorphic);
  CHECK(classify(S({4, 4, 4, 5})).morphism == Morphism::Polymorphic);

  c = classify(S({3, 4, 7, 4}));
  CHECK(c.morphism == Morphism::Monomorphic);

  c = classify(S({3, 3, 5, 3, 5}));
  CHECK(c.morphism == Morphism::Monomorphic);
  CHECK(c.concentricity == Concentricity::NonConcentric);
  REQUIRE(c.recommended_root);
  CHECK(*c.recommended_root == 5);

  c = classify(S({4, 6, 14}));
  CHECK(c.morphism == Morphism::Monomorphic);
  CHECK(c.concentricity == Concentricity::NonConcentric);
  CHECK(std::count(c.root_options.begin(), c.root_options.end(), 6) == 1);
  CHECK(std::count(c.root_options.begin(), c.root_options.end(), 14) == 1);
  CHECK(std::count(c.root_options.begin(), c.root_options.end(), 4) == 0);
}

TEST_CASE("long edge-homogeneous sequences are monomorphic, others unknown") {
  CHECK(classify(S({3, 3, 3, 3, 3, 3, 3})).morphism == Morphism::Monomorphic);
  CHECK(classify(S({4, 5, 4, 5, 4, 5, 4, 5})).morphism == Morphism::Monomorphic);
  CHECK(classify(S({3, 3, 3, 3, 3, 3, 4})).morphism == Morphism::Unknown);
}

TEST_CASE("sufficient polymorphism test") {
  CHECK(polymorphism_sufficient(S({5, 5, 5, 6})));
  CHECK_FALSE(polymorphism_sufficient(S({4, 5, 4, 5})));
  CHECK(polymorphism_sufficient(S({4, 4, 6, 8})));
  CHECK_THROWS_AS(polymorphism_sufficient(S({3, 3, 3, 3, 7})), std::domain_error);
}

TEST_CASE("minimal representatives") {
  auto r = minimal_representatives("[p,q,r]");
  REQUIRE(r.size() == 1);
  CHECK(r[0] == S({6, 8, 10}));

  r = minimal_representatives("[p,q,r,s]");
  CHECK(r.size() == 3);
  for (auto v : {std::vector<int>{4, 6, 8, 10}, {4, 6, 10, 8}, {4, 8, 6, 10}})
    CHECK(std::find(r.begin(), r.end(), S(v)) != r.end());

  r = minimal_representatives("[p,q,r,s,t]");
  REQUIRE(r.size() == 12);
  CHECK(r[0] == S({4, 6, 8, 10, 12}));
  for (size_t i = 0; i < r.size(); ++i)
    for (size_t j = i + 1; j < r.size(); ++j) CHECK(leq(r[i], r[j]) == Order::Incomparable);
}

TEST_CASE("classification JSON") {
  auto s = S({4, 6, 14});
  auto j = nlohmann::json::parse(classification_json(s, classify(s)));
  CHECK(j["morphism"] == "Monomorphic");
  CHECK(j["matched_family"] == "[4,p,q]");
  CHECK(nlohmann::json::parse(catalog_json())["families"].size() > 50);
}
