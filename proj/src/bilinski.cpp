// Corona-by-corona boundary rewriting.
//
// After corona n is complete the patch is a disk whose outer cycle is U_n.
// Every boundary vertex v carries d(v) = valence - (faces placed) missing
// corners.  Corona n+1 fills all of them: walking the boundary, each vertex
// gets d-2 wedges (faces meeting the old patch in v alone) and each maximal
// run u_0..u_m whose interior vertices have d = 1 gets one face containing the
// whole run.  Consecutive new faces share a spoke from the old vertex to a new
// vertex, so the topology of the corona is fixed before any valence is known.
// Valences are then assigned face by face (a placement of sigma on each new
// face) with backtracking, pruning on the ring of neighbour valences around
// each touched vertex.
#include "tessgrowth/bilinski.hpp"

#include "tessgrowth/classification.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace tg {

std::vector<int> PatchGraph::face(int f) const {
  return std::vector<int>(face_verts.begin() + face_start[f], face_verts.begin() + face_start[f + 1]);
}

std::vector<std::pair<int, int>> PatchGraph::edges() const {
  std::set<std::pair<int, int>> es;
  for (int f = 0; f < face_count(); ++f) {
    int b = face_start[f], e = face_start[f + 1], len = e - b;
    for (int t = 0; t < len; ++t) {
      int u = face_verts[b + t], v = face_verts[b + (t + 1) % len];
      es.insert({std::min(u, v), std::max(u, v)});
    }
  }
  return {es.begin(), es.end()};
}

std::vector<long long> CoronaProfile::tau() const {
  std::vector<long long> t;
  long long acc = 0;
  for (long long f : faces) t.push_back(acc += f);
  return t;
}

std::vector<double> CoronaProfile::tau_ratios() const {
  auto t = tau();
  std::vector<double> r;
  for (size_t i = 1; i < t.size(); ++i) r.push_back(double(t[i]) / double(t[i - 1]));
  return r;
}

std::vector<double> CoronaProfile::face_ratios() const {
  std::vector<double> r;
  for (size_t i = 1; i < faces.size(); ++i) r.push_back(double(faces[i]) / double(faces[i - 1]));
  return r;
}

const char* to_string(GrowStatus s) {
  switch (s) {
    case GrowStatus::Ok: return "Ok";
    case GrowStatus::Stuck: return "Stuck";
    case GrowStatus::NonConcentric: return "NonConcentric";
    case GrowStatus::PolicyRequired: return "PolicyRequired";
    case GrowStatus::BudgetExceeded: return "BudgetExceeded";
    default: return "BadRoot";
  }
}

AccretionPolicy policy_by_name(const std::string& name) {
  AccretionPolicy p;
  p.id = name;
  if (name == "none") return p;
  if (name == "first") {
    p.canonical = false;
    return p;
  }
  if (name == "T1" || name == "T2") {
    // Around a 4-valent vertex the ring reads 4,x,4,y; the two non-4
    // neighbours sit opposite each other.  T1 wants them different along
    // every double ray of 4-valent vertices, T2 wants them equal.
    bool want_equal = (name == "T2");
    p.rule_valence = 4;
    p.vertex_rule = [want_equal](int valence, const std::vector<int>& ring) {
      if (valence != 4 || ring.size() != 4) return true;
      std::vector<int> side;
      for (int x : ring)
        if (x != 4) side.push_back(x);
      if (side.size() != 2) return true;
      if (side[0] == 0 || side[1] == 0) return true;
      return (side[0] == side[1]) == want_equal;
    };
    if (want_equal) {
      // T2 has 4-valent vertices with two 6-valent and with two 8-valent
      // side neighbours; the reference corona counts use the latter as root.
      p.root_rule = [](int valence, const std::vector<int>& ring) {
        if (valence != 4) return true;
        for (int x : ring)
          if (x != 0 && x != 4 && x != 8) return false;
        return true;
      };
    }
    return p;
  }
  throw std::invalid_argument("unknown policy '" + name + "' (expected none, first, T1, T2)");
}

namespace {

constexpr int kMaxValence = 1024;

class Grower {
 public:
  Grower(const CyclicSequence& s, const AccretionPolicy& pol, const GrowOptions& opt, GrowResult& out)
      : sig_(s.terms()), k_(s.length()), pol_(pol), opt_(opt), out_(out), g_(out.patch) {
    g_.sigma = sig_;
    g_.faces_kept = opt.keep_patch;
    g_.face_start.push_back(0);
    idx_.assign(kMaxValence, -1);
    for (int v : sig_) {
      if (v >= kMaxValence) throw std::invalid_argument("valence too large for the simulator");
      if (idx_[v] < 0) {
        idx_[v] = static_cast<int>(alpha_.size());
        alpha_.push_back(v);
      }
    }
    const int a = static_cast<int>(alpha_.size());
    next_.assign(static_cast<size_t>(a) * a, 0u);
    for (int i = 0; i < k_; ++i) {
      int c = idx_[sig_[i]];
      int l = idx_[sig_[(i + k_ - 1) % k_]], r = idx_[sig_[(i + 1) % k_]];
      next_[c * a + l] |= 1u << r;
      next_[c * a + r] |= 1u << l;
    }
  }

  bool plant(int root_valence) {
    if (root_valence >= kMaxValence || idx_[root_valence] < 0) {
      out_.status = GrowStatus::BadRoot;
      out_.diagnostic = "root valence " + std::to_string(root_valence) + " does not occur in " + seq_str();
      return false;
    }
    g_.root = new_vertex(0);
    g_.valence[g_.root] = root_valence;
    g_.boundary = {g_.root};
    return true;
  }

  bool corona();

 private:
  struct Slot {
    int old_begin, old_count;
    bool merged;
    int fresh_begin, fresh_count;
  };

  std::string seq_str() const { return CyclicSequence(sig_).str(); }

  int new_vertex(int corona) {
    g_.valence.push_back(0);
    g_.vcorona.push_back(corona);
    g_.nbrs.emplace_back();
    faces_at_.push_back(0);
    return static_cast<int>(g_.valence.size()) - 1;
  }

  bool fail(GrowStatus st, int corona, std::string why) {
    out_.status = st;
    out_.failed_corona = corona;
    out_.diagnostic = std::move(why);
    if (st == GrowStatus::NonConcentric && out_.nonconcentric_at == 0) out_.nonconcentric_at = corona;
    return false;
  }

  bool ring_ok(int v, int corona);
  using VertexRule = std::function<bool(int, const std::vector<int>&)>;
  bool rule_search(int valence, std::vector<int>& ring, const std::vector<int>& wild, size_t pos,
                   const VertexRule& rule);

  std::vector<int> sig_;
  int k_;
  AccretionPolicy pol_;
  GrowOptions opt_;
  GrowResult& out_;
  PatchGraph& g_;
  std::vector<int> faces_at_;
  std::vector<int> idx_;     // valence -> alphabet index
  std::vector<int> alpha_;   // alphabet index -> valence
  std::vector<uint32_t> next_;  // [centre][left] -> mask of admissible right neighbours
  bool pinch_seen_ = false;
};

bool Grower::rule_search(int valence, std::vector<int>& ring, const std::vector<int>& wild, size_t pos,
                         const VertexRule& rule) {
  const int a = static_cast<int>(alpha_.size());
  const int c = idx_[valence];
  const size_t L = ring.size();
  if (pos == wild.size()) {
    for (size_t t = 0; t < L; ++t) {
      int x = ring[t], y = ring[(t + 1) % L];
      if (!(next_[c * a + idx_[x]] >> idx_[y] & 1u)) return false;
    }
    return rule(valence, ring);
  }
  size_t slot = static_cast<size_t>(wild[pos]);
  for (int cand = 0; cand < a; ++cand) {
    ring[slot] = alpha_[cand];
    // prune against the already-fixed left neighbour
    int left = ring[(slot + L - 1) % L];
    if (left != 0 && !(next_[c * a + idx_[left]] >> cand & 1u)) continue;
    if (rule_search(valence, ring, wild, pos + 1, rule)) {
      ring[slot] = 0;
      return true;
    }
  }
  ring[slot] = 0;
  return false;
}

bool Grower::ring_ok(int v, int corona) {
  const int P = g_.valence[v];
  if (P == 0) return true;
  if (idx_[P] < 0) return false;
  const auto& nb = g_.nbrs[v];
  const int L0 = static_cast<int>(nb.size());
  if (L0 > P) {
    if (g_.vcorona[v] == corona) pinch_seen_ = true;
    return false;
  }
  const int a = static_cast<int>(alpha_.size());
  const int c = idx_[P];
  // ring entries: alphabet index or -1
  int ring[kMaxValence];
  for (int t = 0; t < L0; ++t) {
    int val = g_.valence[nb[t]];
    ring[t] = val ? idx_[val] : -1;
    if (val && ring[t] < 0) return false;
  }
  for (int t = L0; t < P; ++t) ring[t] = -1;

  if (v == g_.root && pol_.root_rule) {
    std::vector<int> vals(P, 0), wild;
    for (int t = 0; t < P; ++t) {
      if (ring[t] >= 0) vals[t] = alpha_[ring[t]];
      else wild.push_back(t);
    }
    auto both = [this](int val, const std::vector<int>& r) {
      return pol_.root_rule(val, r) && (!pol_.vertex_rule || pol_.vertex_rule(val, r));
    };
    return rule_search(P, vals, wild, 0, both);
  }
  if (pol_.vertex_rule && (pol_.rule_valence == 0 || pol_.rule_valence == P)) {
    std::vector<int> vals(P, 0), wild;
    for (int t = 0; t < P; ++t) {
      if (ring[t] >= 0) vals[t] = alpha_[ring[t]];
      else wild.push_back(t);
    }
    return rule_search(P, vals, wild, 0, pol_.vertex_rule);
  }

  const uint32_t all = (a >= 32) ? ~0u : ((1u << a) - 1u);
  auto allowed = [&](int t) -> uint32_t { return ring[t] >= 0 ? (1u << ring[t]) : all; };
  uint32_t starts = allowed(0);
  for (int s0 = 0; s0 < a; ++s0) {
    if (!(starts >> s0 & 1u)) continue;
    uint32_t reach = 1u << s0;
    for (int t = 1; t < P && reach; ++t) {
      uint32_t nr = 0;
      for (int x = 0; x < a; ++x)
        if (reach >> x & 1u) nr |= next_[c * a + x];
      reach = nr & allowed(t);
    }
    for (int x = 0; x < a; ++x)
      if ((reach >> x & 1u) && (next_[c * a + x] >> s0 & 1u)) return true;
  }
  return false;
}

bool Grower::corona() {
  const int n = g_.complete + 1;
  std::vector<int> olds;
  std::vector<Slot> slots;
  auto add_slot = [&](const std::vector<int>& run) {
    Slot s{static_cast<int>(olds.size()), static_cast<int>(run.size()), false, 0, 0};
    olds.insert(olds.end(), run.begin(), run.end());
    slots.push_back(s);
  };

  if (n == 1) {
    for (int i = 0; i < g_.valence[g_.root]; ++i) add_slot({g_.root});
  } else {
    std::vector<int> B = g_.boundary;
    const int L = static_cast<int>(B.size());
    std::vector<int> d(L);
    for (int i = 0; i < L; ++i) d[i] = g_.valence[B[i]] - faces_at_[B[i]];
    int s0 = -1;
    for (int i = 0; i < L; ++i)
      if (d[i] >= 2) { s0 = i; break; }
    if (s0 < 0) return fail(GrowStatus::Stuck, n, "every boundary vertex has a single missing corner; the patch closes up");
    std::rotate(B.begin(), B.begin() + s0, B.end());
    std::rotate(d.begin(), d.begin() + s0, d.end());
    int i = 0;
    while (i < L) {
      for (int w = 0; w < d[i] - 2; ++w) add_slot({B[i]});
      int j = i + 1;
      while (j < L && d[j] == 1) ++j;
      if (i == 0 && j == L)
        return fail(GrowStatus::Stuck, n, "a single face would have to wrap the whole boundary");
      std::vector<int> run;
      for (int t = i; t <= j; ++t) run.push_back(B[t % L]);
      add_slot(run);
      i = j;
    }
  }

  const int S = static_cast<int>(slots.size());
  long long total = 0;
  for (long long f : out_.profile.faces) total += f;
  if (total + S > opt_.face_cap)
    return fail(GrowStatus::BudgetExceeded, n, "face cap of " + std::to_string(opt_.face_cap) + " would be exceeded");

  for (auto& s : slots) {
    int c = k_ - s.old_count - 2;
    if (c < -1) {
      return fail(GrowStatus::NonConcentric, n - 1,
                  "a face of corona " + std::to_string(n) + " meets " + std::to_string(s.old_count) +
                      " consecutive vertices of U_" + std::to_string(n - 1) + ", closing a chord inside it");
    }
    s.merged = (c == -1);
    s.fresh_count = std::max(c, 0);
  }

  // Gap g sits between slot g and slot g+1; merged slots identify their two gaps.
  std::vector<int> uf(S);
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
  for (int i = 0; i < S; ++i)
    if (slots[i].merged) uf[find((i + S - 1) % S)] = find(i);
  std::vector<int> gapv(S, -1);
  {
    std::map<int, int> rootv;
    for (int gi = 0; gi < S; ++gi) {
      int r = find(gi);
      auto it = rootv.find(r);
      if (it == rootv.end()) it = rootv.emplace(r, new_vertex(n)).first;
      gapv[gi] = it->second;
    }
    if (rootv.size() == 1 && S > 1)
      return fail(GrowStatus::Stuck, n, "all spokes of the corona collapse to one vertex");
  }
  std::vector<int> fresh;
  for (auto& s : slots) {
    s.fresh_begin = static_cast<int>(fresh.size());
    for (int t = 0; t < s.fresh_count; ++t) fresh.push_back(new_vertex(n));
  }

  // Face cycles: [gap before, u_0..u_m, gap after, fresh reversed].
  std::vector<int> fv, fs{0};
  for (int i = 0; i < S; ++i) {
    const auto& s = slots[i];
    int before = gapv[(i + S - 1) % S], after = gapv[i];
    size_t b0 = fv.size();
    fv.push_back(before);
    for (int t = 0; t < s.old_count; ++t) fv.push_back(olds[s.old_begin + t]);
    if (!s.merged) fv.push_back(after);
    for (int t = s.fresh_count - 1; t >= 0; --t) fv.push_back(fresh[s.fresh_begin + t]);
    std::vector<int> chk(fv.begin() + b0, fv.end());
    std::sort(chk.begin(), chk.end());
    if (std::adjacent_find(chk.begin(), chk.end()) != chk.end())
      return fail(GrowStatus::Stuck, n, "a face of the corona would repeat a vertex");
    fs.push_back(static_cast<int>(fv.size()));
    for (size_t t = b0; t < fv.size(); ++t) faces_at_[fv[t]]++;
  }

  // Spokes of the old vertices, in rotational order.  Only the first boundary
  // vertex has its gaps wrap past the end of the slot list.
  for (int step = 0; step < S; ++step) {
    int gi = (step + S - 1) % S;
    const auto& s = slots[gi];
    int u = olds[s.old_begin + s.old_count - 1];
    g_.nbrs[u].push_back(gapv[gi]);
  }

  // New boundary, in the same direction as the old one.
  std::vector<int> nb;
  for (int i = 0; i < S; ++i) {
    nb.push_back(gapv[(i + S - 1) % S]);
    for (int t = 0; t < slots[i].fresh_count; ++t) nb.push_back(fresh[slots[i].fresh_begin + t]);
  }
  {
    std::vector<int> dd;
    for (int x : nb)
      if (dd.empty() || dd.back() != x) dd.push_back(x);
    while (dd.size() > 1 && dd.front() == dd.back()) dd.pop_back();
    nb.swap(dd);
  }
  if (nb.size() < 3) return fail(GrowStatus::Stuck, n, "the new boundary degenerates");

  // Old neighbours of each gap vertex, walking each chain of identified gaps.
  std::map<int, std::vector<int>> oldnb;
  for (int gi = 0; gi < S; ++gi) {
    int prev = (gi + S - 1) % S;
    if (gapv[prev] == gapv[gi]) continue;  // not the start of a chain
    int x = gapv[gi];
    for (int h = gi, cnt = 0; cnt < S && gapv[h] == x; h = (h + 1) % S, ++cnt) {
      const auto& s = slots[h];
      oldnb[x].push_back(olds[s.old_begin + s.old_count - 1]);
    }
  }
  const int NB = static_cast<int>(nb.size());
  for (int t = 0; t < NB; ++t) {
    int x = nb[t];
    auto& v = g_.nbrs[x];
    v.push_back(nb[(t + 1) % NB]);
    auto it = oldnb.find(x);
    if (it != oldnb.end()) v.insert(v.end(), it->second.rbegin(), it->second.rend());
    v.push_back(nb[(t + NB - 1) % NB]);
  }

  // Valence assignment by depth-first search over the slots.
  std::vector<int> choice(S, -1), undo, undo_start(S, 0);
  std::vector<int> lab(k_);
  long long budget = opt_.search_budget >= 0 ? opt_.search_budget : 400LL * S + 200000;
  long long steps = 0;
  pinch_seen_ = false;
  int i = 0;
  while (i < S) {
    if (choice[i] == -1) undo_start[i] = static_cast<int>(undo.size());
    const int b = fs[i], e = fs[i + 1];
    bool placed = false;
    for (int pi = choice[i] + 1; pi < 2 * k_; ++pi) {
      if (++steps > budget)
        return fail(GrowStatus::BudgetExceeded, n, "backtracking budget exhausted while labelling corona " + std::to_string(n));
      const int o = pi % k_, dir = pi < k_ ? 1 : -1;
      bool ok = true;
      for (int t = 0; t < k_ && ok; ++t) {
        lab[t] = sig_[((o + dir * t) % k_ + k_) % k_];
        int have = g_.valence[fv[b + t]];
        if (have && have != lab[t]) ok = false;
      }
      if (!ok) continue;
      // skip placements that repeat an earlier labelling
      bool dup = false;
      for (int pj = 0; pj < pi && !dup; ++pj) {
        const int o2 = pj % k_, d2 = pj < k_ ? 1 : -1;
        bool same = true;
        for (int t = 0; t < k_ && same; ++t) same = sig_[((o2 + d2 * t) % k_ + k_) % k_] == lab[t];
        dup = same;
      }
      if (dup) continue;
      for (int t = 0; t < k_; ++t) {
        int v = fv[b + t];
        if (!g_.valence[v]) {
          g_.valence[v] = lab[t];
          undo.push_back(v);
        }
      }
      bool good = true;
      for (int t = b; t < e && good; ++t) good = ring_ok(fv[t], n);
      if (good) {
        choice[i] = pi;
        placed = true;
        break;
      }
      while (static_cast<int>(undo.size()) > undo_start[i]) {
        g_.valence[undo.back()] = 0;
        undo.pop_back();
      }
    }
    if (placed) {
      ++i;
      continue;
    }
    choice[i] = -1;
    --i;
    if (i < 0) {
      if (pinch_seen_)
        return fail(GrowStatus::NonConcentric, n,
                    "every labelling saturates a vertex of U_" + std::to_string(n) +
                        " on the boundary (a pendant vertex in U_" + std::to_string(n) + ")");
      return fail(GrowStatus::Stuck, n, "no labelling of corona " + std::to_string(n) + " is consistent with " + seq_str());
    }
    while (static_cast<int>(undo.size()) > undo_start[i]) {
      g_.valence[undo.back()] = 0;
      undo.pop_back();
    }
  }

  // Commit.
  std::map<std::pair<int, int>, long long> census;
  for (int f = 0; f < S; ++f) {
    const int pi = choice[f], o = pi % k_, dir = pi < k_ ? 1 : -1;
    const int m1 = slots[f].old_count;
    std::set<int> pos;
    for (int t = 1; t <= m1; ++t) pos.insert(((o + dir * t) % k_ + k_) % k_);
    int later = *pos.begin();
    for (int p : pos)
      if (!pos.count((p + 1) % k_)) later = p;
    census[{m1, later}]++;
    if (opt_.keep_patch) {
      g_.face_verts.insert(g_.face_verts.end(), fv.begin() + fs[f], fv.begin() + fs[f + 1]);
      g_.face_start.push_back(static_cast<int>(g_.face_verts.size()));
      g_.face_corona.push_back(n);
      g_.face_old.push_back(m1);
      g_.face_offset.push_back(o);
      g_.face_dir.push_back(dir);
    }
  }
  out_.census.emplace_back(census.begin(), census.end());
  out_.profile.faces.push_back(S);
  out_.profile.vertices.push_back(static_cast<long long>(nb.size()));
  if (!opt_.keep_patch) {
    for (int v : g_.boundary) std::vector<int>().swap(g_.nbrs[v]);
  }
  g_.boundary = nb;
  g_.complete = n;
  return true;
}

}  // namespace

int default_root(const CyclicSequence& s) {
  auto c = classify(s);
  if (c.recommended_root) return *c.recommended_root;
  return *std::min_element(s.terms().begin(), s.terms().end());
}

GrowResult grow(const CyclicSequence& s, int root_valence, int n_coronas, const AccretionPolicy& policy,
                const GrowOptions& opt) {
  GrowResult out;
  if (policy.id == "none") {
    auto c = classify(s);
    if (c.morphism == Morphism::Polymorphic) {
      out.status = GrowStatus::PolicyRequired;
      out.diagnostic = s.str() + " is polymorphic; choose an accretion policy (T1/T2 for [4,4,6,8], or 'first')";
      return out;
    }
  }
  Grower gr(s, policy, opt, out);
  if (!gr.plant(root_valence)) return out;
  for (int n = 1; n <= n_coronas; ++n)
    if (!gr.corona()) break;
  return out;
}

bool check_concentric(const GrowResult& g, int n) {
  if (g.nonconcentric_at && n >= g.nonconcentric_at) return false;
  const auto& pg = g.patch;
  if (n < 1 || n > pg.complete) throw std::invalid_argument("corona " + std::to_string(n) + " is not complete");
  if (!pg.faces_kept) throw std::invalid_argument("patch was grown without keeping faces");
  // Induced subgraph on U_n must be a single cycle.
  std::map<int, std::vector<int>> adj;
  for (size_t v = 0; v < pg.vcorona.size(); ++v)
    if (pg.vcorona[v] == n) adj[static_cast<int>(v)];
  for (auto [u, v] : pg.edges())
    if (pg.vcorona[u] == n && pg.vcorona[v] == n) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  if (adj.size() < 3) return false;
  for (auto& [v, a] : adj)
    if (a.size() != 2) return false;
  std::set<int> seen;
  std::vector<int> stack{adj.begin()->first};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (!seen.insert(v).second) continue;
    for (int w : adj[v]) stack.push_back(w);
  }
  return seen.size() == adj.size();
}

GrowthRate estimate_growth(const CoronaProfile& profile) {
  if (profile.faces.size() < 4) throw std::invalid_argument("need at least 4 coronas to estimate growth");
  auto r = profile.tau_ratios();
  GrowthRate g;
  g.source = RateSource::SimulatorEstimate;
  // Geometric mean of the last two ratios: corona counts of several families
  // alternate with period two, and a single ratio then never settles.
  g.value = std::sqrt(r[r.size() - 1] * r[r.size() - 2]);
  double lo = r.back(), hi = r.back();
  for (size_t i = r.size() - std::min<size_t>(3, r.size()); i < r.size(); ++i) {
    lo = std::min(lo, r[i]);
    hi = std::max(hi, r[i]);
  }
  g.lo = from_double(lo);
  g.hi = from_double(hi);
  g.certified = false;
  return g;
}

std::optional<PatchFormat> patch_format(const std::string& name) {
  if (name == "edges" || name == "edge-list" || name == "edgelist") return PatchFormat::EdgeList;
  if (name == "dot") return PatchFormat::Dot;
  if (name == "json") return PatchFormat::Json;
  return std::nullopt;
}

std::string export_patch(const PatchGraph& g, PatchFormat fmt) {
  if (!g.faces_kept) throw std::invalid_argument("patch was grown without keeping faces");
  std::ostringstream os;
  auto es = g.edges();
  switch (fmt) {
    case PatchFormat::EdgeList:
      os << "# " << CyclicSequence(g.sigma).str() << " root " << g.root << " coronas " << g.complete << "\n";
      for (auto [u, v] : es) os << u << " " << v << "\n";
      break;
    case PatchFormat::Dot:
      os << "graph patch {\n";
      os << "  // valence sequence " << CyclicSequence(g.sigma).str() << "\n";
      for (size_t v = 0; v < g.valence.size(); ++v)
        os << "  v" << v << " [label=\"" << g.valence[v] << "\", corona=" << g.vcorona[v] << "];\n";
      for (auto [u, v] : es) os << "  v" << u << " -- v" << v << ";\n";
      os << "}\n";
      break;
    case PatchFormat::Json: {
      nlohmann::json j;
      j["format"] = "tessgrowth-patch";
      j["version"] = 1;
      j["sigma"] = g.sigma;
      j["root"] = g.root;
      j["coronas"] = g.complete;
      nlohmann::json vs = nlohmann::json::array();
      for (size_t v = 0; v < g.valence.size(); ++v)
        vs.push_back({{"id", v}, {"valence", g.valence[v]}, {"corona", g.vcorona[v]}});
      j["vertices"] = vs;
      nlohmann::json fs = nlohmann::json::array();
      for (int f = 0; f < g.face_count(); ++f) fs.push_back({{"corona", g.face_corona[f]}, {"vertices", g.face(f)}});
      j["faces"] = fs;
      nlohmann::json ej = nlohmann::json::array();
      for (auto [u, v] : es) ej.push_back({u, v});
      j["edges"] = ej;
      os << j.dump(1) << "\n";
      break;
    }
  }
  return os.str();
}

PatchGraph import_patch_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  if (j.value("format", "") != "tessgrowth-patch") throw std::invalid_argument("not a patch document");
  PatchGraph g;
  g.sigma = j.at("sigma").get<std::vector<int>>();
  g.root = j.at("root").get<int>();
  g.complete = j.at("coronas").get<int>();
  for (const auto& v : j.at("vertices")) {
    if (v.at("id").get<size_t>() != g.valence.size()) throw std::invalid_argument("vertex ids must be dense");
    g.valence.push_back(v.at("valence").get<int>());
    g.vcorona.push_back(v.at("corona").get<int>());
  }
  g.nbrs.resize(g.valence.size());
  g.face_start.push_back(0);
  for (const auto& f : j.at("faces")) {
    auto vs = f.at("vertices").get<std::vector<int>>();
    g.face_verts.insert(g.face_verts.end(), vs.begin(), vs.end());
    g.face_start.push_back(static_cast<int>(g.face_verts.size()));
    g.face_corona.push_back(f.at("corona").get<int>());
    g.face_old.push_back(0);
    g.face_offset.push_back(0);
    g.face_dir.push_back(1);
  }
  return g;
}

}  // namespace tg
