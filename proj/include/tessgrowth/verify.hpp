// Verification sweeps shared by the CLI and the acceptance runner.
#pragma once

#include "tessgrowth/cyclic.hpp"
#include "tessgrowth/formulas.hpp"
#include "tessgrowth/rational.hpp"

#include <string>
#include <vector>

namespace tg {

struct OracleCase {
  std::string family;
  CyclicSequence sequence;
  int root = 0;
  std::vector<Rational> matrix_series;
  std::vector<long long> simulator_series;
  int compared = 0;          // coronas compared
  int first_mismatch = 0;    // 0 = none
  std::string sim_status;
  std::string note;

  bool exact(int n) const { return first_mismatch == 0 && compared >= n; }
};

// Uniformly concentric monomorphic families with a matrix, each at the
// minimal representative from the least-growth table.
std::vector<OracleCase> oracle_equivalence(int max_n = 8, long long face_cap = 4'000'000);

struct MonotonicityReport {
  int pairs = 0;
  std::vector<std::string> violations;
  std::vector<std::string> skipped;
};

// Pairs of catalogued monomorphic uniformly concentric sequences with a < b
// in the partial order must have growth(a) <= growth(b).
MonotonicityReport monotonicity_check(double tol = 1e-9);

// 1 + sum(p_i) - 2k
Rational ratio_bound(const CyclicSequence& s);

}  // namespace tg
