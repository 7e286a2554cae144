// Closed-form growth rates, the least-growth table and the minimal-sequence
// tables, plus sweeps comparing closed forms against spectra.
#pragma once

#include "tessgrowth/classification.hpp"
#include "tessgrowth/cyclic.hpp"
#include "tessgrowth/spectral.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace tg {

struct EdgeSymbol {
  int p = 3, q = 3, k = 3, l = 3;
  std::string str() const;
};

// Grünbaum–Shephard existence cases.
bool edge_symbol_exists(const EdgeSymbol& e);
// <p,q;k,k> for a constant or alternating sequence of length k.
std::optional<EdgeSymbol> edge_symbol_of(const CyclicSequence& s);

// g(t) = (t - 2 + sqrt((t-2)^2 - 4)) / 2, t >= 4.
double g_of_t(const Rational& t);
Rational edge_t(const EdgeSymbol& e);
// g(t), or g(t - 1) when e or its dual is <3,p;4,4> with p >= 6.
// Throws std::invalid_argument for a non-existent symbol.
GrowthRate edge_homogeneous_growth(const EdgeSymbol& e);

struct ClosedFormEntry {
  std::string family_id;
  std::string expression;   // readable form of what is evaluated
  std::string anchor;
  std::function<double(const Bindings&)> eval;
  // Palindromic quartic parameters (a, b) when the closed form is the largest
  // root of z^4 - a z^3 - b z^2 - a z + 1.
  std::function<std::pair<Rational, Rational>(const Bindings&)> quartic;
};

const std::vector<ClosedFormEntry>& closed_forms();
const ClosedFormEntry* find_closed_form(const std::string& family_id);

// Printed closed form for s's family, or nullopt for lower-bound-only and
// unclassified families.  Edge-homogeneous sequences of length >= 7 use g(t).
std::optional<GrowthRate> closed_form_gamma(const CyclicSequence& s);

struct LeastGrowthRow {
  std::string family;         // class label as printed
  CyclicSequence minimal;
  std::string printed;        // printed truncated value
  double computed = 0;
  std::string computed_str;   // truncated to the printed number of decimals
  bool bold = false;          // golden-mean rows
  bool matches = false;
  std::string error;          // set when the computation threw
};

std::vector<LeastGrowthRow> least_growth_table();

struct MinimalRow {
  CyclicSequence sequence;
  std::string printed;
  double computed = 0;
  bool matches = false;       // equal after truncation to 4 decimals
  bool starred = false;       // table minimum
};

std::vector<MinimalRow> pqrst_minimal_table();
std::vector<MinimalRow> pqrstu_minimal_table();

struct ConsistencyCase {
  Bindings bindings;
  CyclicSequence sequence;
  double closed = 0;
  double spectral = 0;
};

struct ConsistencyReport {
  std::string family_id;
  int tested = 0;
  double max_diff = 0;
  std::vector<ConsistencyCase> mismatches;
  bool ok() const { return tested > 0 && mismatches.empty(); }
};

// Admissible letter assignments for a family (parity, guard, distinctness,
// positive excess), smallest values first.
std::vector<Bindings> admissible_bindings(const std::string& family_id, int count);

ConsistencyReport verify_consistency(const std::string& family_id, int count = 20, double tol = 1e-9);
// Every family with both a closed form and a matrix.
std::vector<std::string> consistency_families();

std::string truncated4(double x);

}  // namespace tg
