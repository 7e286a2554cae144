#include "tessgrowth/transition.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace tg {

namespace {

int wrap(int i, int k) { return ((i % k) + k) % k; }

// Sum of p_j over j outside the cyclic window [from, to] (inclusive).
Rational sum_outside(const CyclicSequence& s, int from, int to) {
  const int k = s.length();
  std::vector<bool> in(k, false);
  for (int j = from; j <= to; ++j) in[wrap(j, k)] = true;
  Rational t = 0;
  for (int j = 0; j < k; ++j)
    if (!in[j]) t += s[j];
  return t;
}

std::string label_for(FaceKind kind, int i) {
  switch (kind) {
    case FaceKind::Wedge: return "w" + std::to_string(i);
    case FaceKind::Brick: return "b" + std::to_string(i);
    case FaceKind::NotchedBrick: return "n" + std::to_string(i);
    default: return "f" + std::to_string(i);
  }
}

std::vector<Rational> ones(int n) { return std::vector<Rational>(n, Rational(1)); }

}  // namespace

OffspringCount offspring_counts(const CyclicSequence& s, FaceKind kind, int i) {
  const int k = s.length();
  const Rational two_k(2 * k);
  OffspringCount out;
  out.face = {kind, i, label_for(kind, i)};
  switch (kind) {
    case FaceKind::Wedge:
      out.omega = Rational(s[i - 2] + s[i], 2) - two_k + 3 + sum_outside(s, i - 2, i);
      break;
    case FaceKind::Brick:
      out.omega = Rational(s[i - 3] + s[i], 2) - two_k + 5 + sum_outside(s, i - 3, i);
      break;
    case FaceKind::NotchedBrick:
      if (s[i - 1] != 3)
        throw std::invalid_argument("notched brick n" + std::to_string(i) + " needs p_" + std::to_string(i - 1) +
                                    " = 3 in " + s.str());
      out.omega = Rational(s[i - 3] + s[i + 1], 2) - two_k + 7 + sum_outside(s, i - 3, i + 1);
      break;
    default:
      throw std::invalid_argument("offspring counts are defined for wedges and bricks only");
  }
  return out;
}

TransitionMatrix block_matrix_g44(const CyclicSequence& s) {
  const int k = s.length();
  if (k < 4) throw std::invalid_argument("block matrix needs length >= 4: " + s.str());
  for (int x : s.terms())
    if (x < 4) throw std::invalid_argument("block matrix needs every term >= 4: " + s.str());

  TransitionMatrix t;
  t.family = "block";
  t.m = RationalMatrix(2 * k);
  for (int i = 0; i < k; ++i) {
    const Rational pm = s[i];  // row i+1 of the lemma reads p_i
    const Rational half = (pm - 4) / 2, full = pm - 3;
    for (int j = 0; j < k; ++j) {
      const int d = wrap(j - i, k);
      // wedge children of a wedge / of a brick
      t.m(i, j) = d == 0 ? Rational(0) : (d == 1 || d == k - 1) ? half : full;
      t.m(i, k + j) = (d == 0 || d == 1) ? Rational(0) : (d == 2 || d == k - 1) ? half : full;
      // brick children: one per gap except next to the parent's own corner
      t.m(k + i, j) = (d == 0 || d == k - 1) ? 0 : 1;
      t.m(k + i, k + j) = (d == 0 || d == 1 || d == k - 1) ? 0 : 1;
    }
  }
  for (int i = 1; i <= k; ++i) t.labels.push_back({FaceKind::Wedge, i, label_for(FaceKind::Wedge, i)});
  for (int i = 1; i <= k; ++i) t.labels.push_back({FaceKind::Brick, i, label_for(FaceKind::Brick, i)});
  t.weights = ones(2 * k);
  return t;
}

bool edge_homogeneous(const CyclicSequence& s) {
  const int k = s.length();
  for (int i = 0; i < k; ++i)
    if (s[i] != s[i + 2]) return false;
  return k % 2 == 0 || s[0] == s[1];
}

Rational edge_parameter(const CyclicSequence& s) {
  if (!edge_homogeneous(s)) throw std::invalid_argument("not edge-homogeneous: " + s.str());
  const Rational k = s.length();
  return (Rational(s[0] + s[1], 2) - 2) * (k - 2);
}

TransitionMatrix edge_matrix(const CyclicSequence& s) {
  Rational t = edge_parameter(s);
  const bool special = s.length() == 4 && s[0] != s[1] && std::min(s[0], s[1]) == 3;
  Rational c = t - (special ? 3 : 2);
  TransitionMatrix out;
  out.family = "edge";
  out.m = RationalMatrix{{c, Rational(-1)}, {Rational(1), Rational(0)}};
  out.labels = {{FaceKind::Other, 1, "f1"}, {FaceKind::Other, 2, "f2"}};
  out.weights = ones(2);
  return out;
}

namespace {

std::vector<Rational> block_v1(const CyclicSequence& s, int root) {
  const int k = s.length();
  std::vector<Rational> v(2 * k);
  for (int i = 0; i < k; ++i)
    if (s[i] == root) {
      v[i] = root;
      return v;
    }
  throw std::invalid_argument("root valence " + std::to_string(root) + " does not occur in " + s.str());
}

}  // namespace

CatalogMatrix catalog_matrix(const CyclicSequence& s, const std::string& variant, int root_valence) {
  CatalogMatrix out;
  const bool is4468 = s.terms() == std::vector<int>{4, 4, 6, 8};

  if (is4468) {
    if (variant != "T1" && variant != "T2")
      throw std::invalid_argument("[4,4,6,8] is polymorphic: choose variant T1 or T2");
    if (root_valence != 0 && root_valence != 4)
      throw std::invalid_argument("[4,4,6,8] matrices are rooted at a 4-valent vertex");
    out.matrix = template_matrix(variant, {});
    out.root_valence = 4;
    out.v1 = *template_v1(variant, {}, 4);
    out.root_description = variant == "T2" ? "4-valent vertex whose side neighbours are both 8-valent"
                                           : "4-valent vertex";
    out.anchor = "[4,4,6,8] policy " + variant;
    return out;
  }
  if (!variant.empty() && variant != "block")
    throw std::invalid_argument("variant " + variant + " only applies to [4,4,6,8]");

  auto m = match_pattern(s);
  if (!m || m->row->morphism != Morphism::Monomorphic || m->row->matrix_id.empty())
    throw std::invalid_argument("no catalog matrix for " + s.str());
  const FamilyRow& row = *m->row;

  int root = root_valence;
  if (root == 0) {
    for (char ch : row.root_letters) {
      root = std::isdigit(static_cast<unsigned char>(ch)) ? ch - '0' : m->bindings.at(ch);
      break;
    }
  }
  if (std::find(s.terms().begin(), s.terms().end(), root) == s.terms().end())
    throw std::invalid_argument("root valence " + std::to_string(root) + " does not occur in " + s.str());
  out.root_valence = root;
  out.root_description = std::to_string(root) + "-valent vertex";
  out.anchor = row.anchor;

  if (variant == "block") {
    out.matrix = block_matrix_g44(s);
    out.v1 = block_v1(s, root);
    out.anchor = "wedge/brick block construction";
    return out;
  }
  if (row.matrix_id == "edge") {
    out.matrix = edge_matrix(s);
    out.v1 = {Rational(root), Rational(0)};
    return out;
  }
  out.matrix = template_matrix(row.matrix_id, m->bindings);
  auto v = template_v1(row.matrix_id, m->bindings, root);
  if (!v) throw std::invalid_argument("family " + row.pattern.id + " has no first distribution for a " +
                                      std::to_string(root) + "-valent root");
  out.v1 = *v;
  return out;
}

std::vector<Rational> first_distribution(const CyclicSequence& s, int root_valence, const std::string& variant) {
  return catalog_matrix(s, variant, root_valence).v1;
}

std::string matrix_json(const TransitionMatrix& t) {
  nlohmann::json j;
  j["family"] = t.family;
  j["size"] = t.size();
  j["orientation"] = "column=parent";
  j["transposed"] = t.transposed;
  std::vector<std::string> labels, weights;
  for (const auto& l : t.labels) labels.push_back(l.label);
  for (const auto& w : t.weights) weights.push_back(to_string(w));
  j["labels"] = labels;
  j["weights"] = weights;
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < t.size(); ++i) {
    std::vector<std::string> r;
    for (int c = 0; c < t.size(); ++c) r.push_back(to_string(t.m(i, c)));
    rows.push_back(r);
  }
  j["rows"] = rows;
  return j.dump(2);
}

int first_nonpositive_corona(const TransitionMatrix& t, const std::vector<Rational>& v1, int n) {
  std::vector<Rational> v = v1;
  for (int c = 1; c <= n; ++c) {
    Rational total = 0;
    for (int i = 0; i < t.size(); ++i) total += t.weights[i] * v[i];
    if (total <= 0) return c;
    v = t.m.apply(v);
  }
  return 0;
}

}  // namespace tg
