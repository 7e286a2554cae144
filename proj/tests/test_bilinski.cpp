#include "tessgrowth/bilinski.hpp"
#include "tessgrowth/transition.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>

using namespace tg;

static CyclicSequence S(std::vector<int> v) { return CyclicSequence(v); }

TEST_CASE("[4,4,6,8] coronas under the two policies") {
  auto t1 = grow(S({4, 4, 6, 8}), 4, 5, policy_by_name("T1"));
  CHECK(t1.status == GrowStatus::Ok);
  CHECK(t1.profile.faces == std::vector<long long>{4, 30, 110, 494, 1938});
  auto t2 = grow(S({4, 4, 6, 8}), 4, 5, policy_by_name("T2"));
  CHECK(t2.profile.faces == std::vector<long long>{4, 28, 108, 468, 1900});
  // polymorphic without a policy
  CHECK(grow(S({4, 4, 6, 8}), 4, 2, policy_by_name("none")).status == GrowStatus::PolicyRequired);
}

TEST_CASE("[7,7,7] first coronas") {
  auto g = grow(S({7, 7, 7}), 7, 2, policy_by_name("none"));
  CHECK(g.profile.faces == std::vector<long long>{7, 28});
  CHECK(grow(S({7, 7, 7}), 5, 2, policy_by_name("none")).status == GrowStatus::BadRoot);
}

TEST_CASE("concentricity") {
  auto g5 = grow(S({3, 3, 5, 3, 5}), 5, 4, policy_by_name("none"));
  REQUIRE(g5.patch.complete == 4);
  for (int n = 1; n <= 4; ++n) CHECK(check_concentric(g5, n));

  auto g3 = grow(S({3, 3, 5, 3, 5}), 3, 4, policy_by_name("none"));
  CHECK(g3.status == GrowStatus::NonConcentric);
  CHECK(g3.nonconcentric_at == 3);
  CHECK(g3.diagnostic.find("pendant") != std::string::npos);

  auto q = grow(S({5, 5, 5, 5}), 5, 4, policy_by_name("none"));
  for (int n = 1; n <= 4; ++n) CHECK(check_concentric(q, n));
}

TEST_CASE("growth estimates") {
  GrowOptions lean;
  lean.keep_patch = false;
  auto t1 = grow(S({4, 4, 6, 8}), 4, 9, policy_by_name("T1"), lean);
  CHECK(std::fabs(estimate_growth(t1.profile).value / 4.13016 - 1) < 0.02);
  auto h = grow(S({7, 7, 7}), 7, 10, policy_by_name("none"), lean);
  CHECK(std::fabs(estimate_growth(h.profile).value / 2.61803 - 1) < 0.01);
  auto g = grow(S({4, 6, 14}), 6, 12, policy_by_name("none"), lean);
  CHECK(std::fabs(estimate_growth(g.profile).value / 1.61803 - 1) < 0.02);
  CHECK_THROWS_AS(estimate_growth(CoronaProfile{{1, 2, 3}, {1, 2, 3}}), std::invalid_argument);
}

TEST_CASE("simulator agrees with the matrix series") {
  for (auto v : {std::vector<int>{7, 7, 7}, {4, 5, 4, 5}, {3, 4, 7, 4}, {4, 6, 14}}) {
    auto s = S(v);
    auto cm = catalog_matrix(s);
    auto series = corona_series(cm.matrix.m, cm.v1, 6, cm.matrix.weights);
    auto g = grow(s, cm.root_valence, 6, policy_by_name("none"));
    REQUIRE(g.profile.faces.size() == 6);
    for (int i = 0; i < 6; ++i) CHECK(series[i] == g.profile.faces[i]);
  }
}

TEST_CASE("patch export") {
  auto g = grow(S({7, 7, 7}), 7, 1, policy_by_name("none"));
  CHECK(g.patch.edges().size() == 14);
  auto el = export_patch(g.patch, PatchFormat::EdgeList);
  CHECK(std::count(el.begin(), el.end(), '\n') >= 14);

  auto dot = export_patch(g.patch, PatchFormat::Dot);
  CHECK(dot.rfind("graph", 0) == 0);
  CHECK(std::count(dot.begin(), dot.end(), '{') == std::count(dot.begin(), dot.end(), '}'));

  auto t = grow(S({4, 4, 6, 8}), 4, 2, policy_by_name("T1"));
  auto back = import_patch_json(export_patch(t.patch, PatchFormat::Json));
  CHECK(back.edges() == t.patch.edges());
  CHECK(back.valence == t.patch.valence);
  CHECK(back.face_count() == t.patch.face_count());
  CHECK(patch_format("dot") == PatchFormat::Dot);
  CHECK_FALSE(patch_format("png"));
}
