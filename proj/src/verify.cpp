#include "tessgrowth/verify.hpp"

#include "tessgrowth/bilinski.hpp"
#include "tessgrowth/classification.hpp"
#include "tessgrowth/spectral.hpp"
#include "tessgrowth/tables.hpp"
#include "tessgrowth/transition.hpp"

#include <map>
#include <set>

namespace tg {

Rational ratio_bound(const CyclicSequence& s) {
  Rational t = 1 - 2 * s.length();
  for (int x : s.terms()) t += x;
  return t;
}

namespace {

bool oracle_family(const FamilyRow& row) {
  return row.morphism == Morphism::Monomorphic && row.concentricity == Concentricity::UniformlyConcentric &&
         !row.matrix_id.empty();
}

}  // namespace

std::vector<OracleCase> oracle_equivalence(int max_n, long long face_cap) {
  std::vector<OracleCase> cases;
  std::set<const FamilyRow*> covered;
  for (const auto& r : least_growth_table()) {
    auto m = match_pattern(r.minimal);
    if (!m || !oracle_family(*m->row) || covered.count(m->row)) continue;
    covered.insert(m->row);
    OracleCase c{m->row->pattern.id, r.minimal, 0, {}, {}, 0, 0, {}, {}};
    cases.push_back(c);
  }
  // Families that the table does not list still get checked, at their first
  // minimal member.
  for (const auto& row : catalog()) {
    if (!oracle_family(row) || covered.count(&row)) continue;
    auto reps = minimal_representatives(row.pattern.id);
    if (reps.empty()) continue;
    cases.push_back(OracleCase{row.pattern.id, reps.front(), 0, {}, {}, 0, 0, {}, {}});
  }

  parallel_for(static_cast<int>(cases.size()), [&](int i) {
    OracleCase& c = cases[i];
    try {
      CatalogMatrix cm = catalog_matrix(c.sequence);
      c.root = cm.root_valence;
      c.matrix_series = corona_series(cm.matrix.m, cm.v1, max_n, cm.matrix.weights);
      GrowOptions opt;
      opt.keep_patch = false;
      opt.face_cap = face_cap;
      GrowResult g = grow(c.sequence, c.root, max_n, policy_by_name("none"), opt);
      c.simulator_series = g.profile.faces;
      c.sim_status = to_string(g.status);
      if (g.status != GrowStatus::Ok) c.note = g.diagnostic;
      const int n = std::min<int>(max_n, static_cast<int>(c.simulator_series.size()));
      for (int k = 0; k < n; ++k) {
        ++c.compared;
        if (c.matrix_series[k] != c.simulator_series[k]) {
          c.first_mismatch = k + 1;
          break;
        }
      }
    } catch (const std::exception& e) {
      c.sim_status = "error";
      c.note = e.what();
    }
  });
  return cases;
}

MonotonicityReport monotonicity_check(double tol) {
  MonotonicityReport rep;
  std::set<CyclicSequence> pool;
  for (const auto& row : catalog()) {
    if (!oracle_family(row)) continue;
    auto reps = minimal_representatives(row.pattern.id);
    for (size_t i = 0; i < reps.size() && i < 4; ++i) pool.insert(reps[i]);
    for (const auto& b : admissible_bindings(row.pattern.id, 6)) pool.insert(CyclicSequence(row.pattern.instantiate(b)));
  }
  std::map<CyclicSequence, double> rate;
  for (const auto& s : pool) {
    try {
      rate[s] = growth_rate(s).value;
    } catch (const std::exception& e) {
      rep.skipped.push_back(s.str() + ": " + e.what());
    }
  }
  for (const auto& [a, ga] : rate)
    for (const auto& [b, gb] : rate) {
      if (leq(a, b) != Order::Less) continue;
      ++rep.pairs;
      if (ga > gb + tol)
        rep.violations.push_back(a.str() + " < " + b.str() + " but " + std::to_string(ga) + " > " + std::to_string(gb));
    }
  return rep;
}

}  // namespace tg
