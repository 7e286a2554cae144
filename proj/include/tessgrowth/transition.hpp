// Corona transition matrices: the general wedge/brick block construction for
// all-≥4 monomorphic sequences and the per-family catalog of explicit
// matrices.  Convention everywhere: column = parent type, row = child type,
// so v_{n+1} = M v_n and |F_n| = j . v_n.
#pragma once

#include "tessgrowth/classification.hpp"
#include "tessgrowth/cyclic.hpp"
#include "tessgrowth/matrix.hpp"
#include "tessgrowth/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tg {

enum class FaceKind { Wedge, Brick, NotchedBrick, Other };

struct FaceTypeId {
  FaceKind kind = FaceKind::Other;
  int index = 0;          // 1..k for wedge/brick/notched
  std::string label;      // "w1", "b3", "n2", "f4", ...
};

struct TransitionMatrix {
  RationalMatrix m;
  std::vector<FaceTypeId> labels;
  std::vector<Rational> weights;   // j; all ones unless a reduction says otherwise
  std::string family;              // catalog family or "block" / "T1" / "T2"
  bool transposed = false;         // true if the printed form was row = parent

  int size() const { return m.size(); }
};

struct OffspringCount {
  FaceTypeId face;
  Rational omega;
};

// Omega for wedge / brick / notched brick of index i (1-based, cyclic).
// Throws std::invalid_argument for a notched brick where p_{i-1} != 3.
OffspringCount offspring_counts(const CyclicSequence& s, FaceKind kind, int i);

// 2k x 2k block matrix for a monomorphic all-≥4 sequence.
TransitionMatrix block_matrix_g44(const CyclicSequence& s);

struct CatalogMatrix {
  TransitionMatrix matrix;
  std::vector<Rational> v1;
  int root_valence = 0;
  std::string root_description;
  std::string anchor;
};

// Explicit matrix for s.  variant is the policy id for [4,4,6,8] ("T1"/"T2").
// When root_valence is 0 the family's default root is used.
// Throws std::invalid_argument when s has no catalog matrix, the variant is
// missing/unknown, or the root is unsupported.
CatalogMatrix catalog_matrix(const CyclicSequence& s, const std::string& variant = "",
                             int root_valence = 0);

// The corona-1 census for a root, in the coordinates of catalog_matrix(s).
std::vector<Rational> first_distribution(const CyclicSequence& s, int root_valence,
                                         const std::string& variant = "");

// Ids of every explicit matrix template (appendix families plus T1/T2 and the
// [p,p,3] halved system).
std::vector<std::string> catalog_matrix_ids();
bool has_catalog_matrix(const std::string& family_id);

// Matrix of one template with letters bound; no sequence needed.
TransitionMatrix template_matrix(const std::string& family_id, const Bindings& b);

// First distribution of a template for a root valence (a bound letter or a
// literal key such as 3 or 4); nullopt when the template has no such root.
std::optional<std::vector<Rational>> template_v1(const std::string& family_id, const Bindings& b, int root);
std::vector<int> template_roots(const std::string& family_id, const Bindings& b);

// 2x2 recurrence for an edge-homogeneous sequence (constant or alternating):
// [[c, -1], [1, 0]] with c = t - 2 (t - 3 for <3,p;4,4>), weights (1, 1).
TransitionMatrix edge_matrix(const CyclicSequence& s);
// Edge parameter t = ((p+q)/2 - 2)((k+l)/2 - 2) of the sequence's edge symbol.
Rational edge_parameter(const CyclicSequence& s);
bool edge_homogeneous(const CyclicSequence& s);

// Integer/rational expression over the letters p..u: + - * / ( ),
// juxtaposition means multiplication ("3p-10", "(p-4)(q-4)").
Rational eval_expression(const std::string& expr, const Bindings& b);

std::string matrix_json(const TransitionMatrix& t);

// Checks j . v_n > 0 for n = 1..N; returns the first failing n or 0.
int first_nonpositive_corona(const TransitionMatrix& t, const std::vector<Rational>& v1, int n);

}  // namespace tg
