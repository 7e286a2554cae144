// Brute-force growth of a face-homogeneous planar patch, one Bilinski corona
// at a time.  Used as an oracle against the transition-matrix machinery.
#pragma once

#include "tessgrowth/cyclic.hpp"
#include "tessgrowth/spectral.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace tg {

// A rule consulted when a vertex's full ring of neighbour valences is known
// (or partially known, with 0 marking an undecided slot).  Returning false
// vetoes the local configuration.
struct AccretionPolicy {
  std::string id = "none";
  bool canonical = true;
  int rule_valence = 0;  // the rule only looks at vertices of this valence; 0 = all
  std::function<bool(int valence, const std::vector<int>& ring)> vertex_rule;
  // Extra constraint on the root's ring, for tessellations that contain
  // several kinds of vertex of the root's valence.
  std::function<bool(int valence, const std::vector<int>& ring)> root_rule;
};

// "none", "first" (first consistent choice, non-canonical), "T1", "T2".
AccretionPolicy policy_by_name(const std::string& name);

struct PatchGraph {
  std::vector<int> sigma;         // canonical valence word
  std::vector<int> valence;       // per vertex
  std::vector<int> vcorona;       // per vertex; root has corona 0
  std::vector<std::vector<int>> nbrs;  // rotational order, may be cleared for interior vertices
  std::vector<int> face_start;    // CSR layout; face_start.size() == faces + 1
  std::vector<int> face_verts;
  std::vector<int> face_corona;
  std::vector<int> face_old;      // number of vertices from the previous corona
  std::vector<int> face_offset;   // placement of sigma: label[t] = sigma[offset + dir*t]
  std::vector<int> face_dir;
  std::vector<int> boundary;      // outer cycle after the last complete corona
  int root = 0;
  int complete = 0;               // number of complete coronas
  bool faces_kept = true;

  int face_count() const { return static_cast<int>(face_corona.size()); }
  std::vector<int> face(int f) const;
  std::vector<std::pair<int, int>> edges() const;  // sorted, u < v
};

struct CoronaProfile {
  std::vector<long long> faces;     // |F_1| ... |F_n|
  std::vector<long long> vertices;  // |U_1| ... |U_n|
  std::vector<long long> tau() const;           // running sums of faces
  std::vector<double> tau_ratios() const;       // tau(n+1)/tau(n)
  std::vector<double> face_ratios() const;      // |F_{n+1}|/|F_n|
};

enum class GrowStatus { Ok, Stuck, NonConcentric, PolicyRequired, BudgetExceeded, BadRoot };
const char* to_string(GrowStatus s);

struct GrowOptions {
  long long face_cap = 10'000'000;
  bool keep_patch = true;
  long long search_budget = -1;  // backtracking steps per corona; <0 = automatic
};

struct GrowResult {
  PatchGraph patch;
  CoronaProfile profile;
  GrowStatus status = GrowStatus::Ok;
  std::string diagnostic;
  int failed_corona = 0;      // corona whose construction failed, if any
  int nonconcentric_at = 0;   // first corona whose U_n is known not to be a cycle
  // Face-type census per corona for wedge/brick/notched faces: key is
  // (old-vertex count, sigma position of the newest old vertex).
  std::vector<std::vector<std::pair<std::pair<int, int>, long long>>> census;
};

// Root is given by its valence; it must occur in the sequence.
GrowResult grow(const CyclicSequence& s, int root_valence, int n_coronas,
                const AccretionPolicy& policy, const GrowOptions& opt = {});

// Root valence used when the caller does not name one.
int default_root(const CyclicSequence& s);

bool check_concentric(const GrowResult& g, int n);

// Geometric mean of the last two tau(n+1)/tau(n) ratios, with an interval
// spanned by the last three ratios.  Throws std::invalid_argument with fewer
// than 4 coronas.
GrowthRate estimate_growth(const CoronaProfile& profile);

enum class PatchFormat { EdgeList, Dot, Json };
std::optional<PatchFormat> patch_format(const std::string& name);
std::string export_patch(const PatchGraph& g, PatchFormat fmt);
PatchGraph import_patch_json(const std::string& text);

}  // namespace tg
