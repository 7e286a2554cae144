#include "tessgrowth/classification.hpp"

#include "tessgrowth/transition.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tg {

const char* to_string(Morphism m) {
  switch (m) {
    case Morphism::Monomorphic: return "Monomorphic";
    case Morphism::Polymorphic: return "Polymorphic";
    default: return "Unknown";
  }
}

const char* to_string(Concentricity c) {
  switch (c) {
    case Concentricity::UniformlyConcentric: return "UniformlyConcentric";
    case Concentricity::NonConcentric: return "NonConcentric";
    default: return "Unknown";
  }
}

const char* to_string(Realizability r) {
  switch (r) {
    case Realizability::Ok: return "Ok";
    case Realizability::ParityViolation: return "ParityViolation";
    default: return "Unknown";
  }
}

int SequencePattern::arity() const { return static_cast<int>(letters().size()); }

std::string SequencePattern::letters() const {
  std::string out;
  for (const auto& s : slots)
    if (s.var && out.find(s.var) == std::string::npos) out += s.var;
  return out;
}

std::vector<int> SequencePattern::instantiate(const Bindings& b) const {
  std::vector<int> out;
  for (const auto& s : slots) {
    if (s.literal) {
      out.push_back(s.literal);
      continue;
    }
    auto it = b.find(s.var);
    if (it == b.end()) throw std::invalid_argument(std::string("unbound letter ") + s.var + " in " + id);
    out.push_back(it->second);
  }
  return out;
}

namespace {

// "1/p+1/q<1/4" -> exact check.  Both sides go through the same expression
// evaluator as the matrix templates.
std::function<bool(const Bindings&)> make_guard(const std::string& text) {
  if (text.empty()) return {};
  auto lt = text.find('<');
  if (lt == std::string::npos) throw std::logic_error("guard without '<': " + text);
  std::string lhs = text.substr(0, lt), rhs = text.substr(lt + 1);
  return [lhs, rhs](const Bindings& b) { return eval_expression(lhs, b) < eval_expression(rhs, b); };
}

int literal_count(const SequencePattern& p) {
  int n = 0;
  for (const auto& s : p.slots) n += s.literal != 0;
  return n;
}

int max_literal(const SequencePattern& p) {
  int m = 0;
  for (const auto& s : p.slots) m = std::max(m, s.literal);
  return m;
}

// Structural key of a slot word: letters renamed by first appearance,
// minimized over rotations/reflections.  Two ids with the same key name the
// same family ("[3,p,p]" and "[p,p,3]").
std::string structure_key(const SequencePattern& p) {
  std::vector<std::string> words;
  int k = static_cast<int>(p.slots.size());
  for (int dir : {1, -1})
    for (int s = 0; s < k; ++s) {
      std::map<char, char> ren;
      std::string w;
      for (int i = 0; i < k; ++i) {
        const Slot& sl = p.slots[((s + dir * i) % k + k) % k];
        if (sl.literal) {
          w += static_cast<char>('0' + sl.literal);
        } else {
          if (!ren.count(sl.var)) ren[sl.var] = static_cast<char>('a' + ren.size());
          w += ren[sl.var];
        }
        w += ',';
      }
      words.push_back(w);
    }
  return *std::min_element(words.begin(), words.end());
}

struct RowSpec {
  const char* id;
  Morphism morph;
  Concentricity conc;
  const char* even;
  const char* guard;
  const char* roots;
  const char* matrix;
  const char* formula;
  const char* anchor;
  std::map<char, int> min_of = {};
};

constexpr auto M = Morphism::Monomorphic;
constexpr auto P = Morphism::Polymorphic;
constexpr auto UC = Concentricity::UniformlyConcentric;
constexpr auto NC = Concentricity::NonConcentric;
constexpr auto CU = Concentricity::Unknown;

std::vector<FamilyRow> build_catalog() {
  // clang-format off
  const std::vector<RowSpec> specs = {
    // length 3: every realizable sequence is monomorphic
    {"[p,p,p]", M, UC, "", "3/p<1", "p", "edge", "edge", "length-3 monomorphic; edge symbol <p,p;3,3>"},
    {"[p,p,3]", M, NC, "p", "2/p<1/6", "p", "[p,p,3]", "[p,p,3]", "non-concentric form [3,p,p]; halved system"},
    {"[p,p,q]", M, UC, "p", "2/p+1/q<1", "pq", "[p,p,q]", "[p,p,q]", "growth of [p,p,q]"},
    {"[4,p,q]", M, NC, "pq", "1/p+1/q<1/4", "pq", "[4,p,q]", "[4,p,q]", "non-concentric form [4,p,q]"},
    {"[p,q,r]", M, UC, "pqr", "1/p+1/q+1/r<1", "pqr", "[p,q,r]", "", "lower bound for [p,q,r]"},

    // length 4
    {"[p,p,p,q]", P, CU, "", "3/p+1/q<1", "", "", "", "length-4 polymorphic forms", {{'q', 3}}},
    {"[p,p,q,r]", P, CU, "pqr", "2/p+1/q+1/r<1", "", "", "", "length-4 polymorphic forms"},
    {"[p,p,p,p]", M, UC, "", "4/p<1", "p", "edge", "edge", "edge symbol <p,p;4,4>"},
    {"[p,p,q,q]", M, UC, "pq", "2/p+2/q<1", "pq", "[p,p,q,q]", "[p,p,q,q]", "growth of [p,p,q,q]"},
    {"[3,p,3,p]", M, NC, "", "2/p<1/3", "p", "edge", "edge", "non-concentric form [3,p,3,p]; edge symbol <3,p;4,4>"},
    {"[p,q,p,q]", M, UC, "", "2/p+2/q<1", "pq", "edge", "edge", "edge symbol <p,q;4,4>"},
    {"[3,p,4,p]", M, NC, "p", "2/p<5/12", "p", "[3,p,4,p]", "[3,p,4,p]", "non-concentric form [3,p,4,p]"},
    {"[3,p,q,p]", M, UC, "p", "2/p+1/q<2/3", "p3q", "[3,p,q,p]", "[3,p,q,p]", "growth of [3,p,q,p]", {{'q', 5}}},
    {"[p,q,p,r]", M, UC, "p", "2/p+1/q+1/r<1", "pqr", "[p,q,p,r]", "[p,q,p,r]", "growth of [p,q,p,r]"},
    {"[p,q,r,s]", M, UC, "pqrs", "1/p+1/q+1/r+1/s<1", "pqrs", "[p,q,r,s]", "", "lower bound for [p,q,r,s]"},

    // length 5, polymorphic
    {"[p,p,p,p,q]", P, UC, "", "4/p+1/q<3/2", "", "", "", "length-5 polymorphic list"},
    {"[p,p,p,p,3]", P, UC, "", "4/p<7/6", "", "", "", "length-5 polymorphic list"},
    {"[p,p,p,q,q]", P, UC, "q", "3/p+2/q<3/2", "", "", "", "length-5 polymorphic list"},
    {"[p,p,q,p,q]", P, UC, "", "3/p+2/q<3/2", "", "", "", "length-5 polymorphic list"},
    {"[p,p,3,p,3]", P, UC, "", "3/p<5/6", "", "", "", "length-5 polymorphic list"},
    {"[p,p,p,q,r]", P, UC, "qr", "3/p+1/q+1/r<3/2", "", "", "", "length-5 polymorphic list"},
    {"[3,3,3,p,q]", P, CU, "pq", "1/p+1/q<1/2", "", "", "", "length-5 polymorphic list"},
    {"[p,p,q,p,r]", P, UC, "", "3/p+1/q+1/r<3/2", "", "", "", "length-5 polymorphic list"},
    {"[p,p,3,p,q]", P, UC, "", "3/p+1/q<7/6", "", "", "", "length-5 polymorphic list"},
    {"[p,p,q,q,r]", P, UC, "pqr", "2/p+2/q+1/r<3/2", "", "", "", "length-5 polymorphic list"},
    {"[p,q,p,q,r]", P, UC, "r", "2/p+2/q+1/r<3/2", "", "", "", "length-5 polymorphic list"},
    {"[3,p,3,p,q]", P, UC, "q", "2/p+1/q<5/6", "", "", "", "length-5 polymorphic list"},
    {"[p,p,q,r,s]", P, UC, "pqrs", "2/p+1/q+1/r+1/s<3/2", "", "", "", "length-5 polymorphic list"},
    {"[p,q,p,r,s]", P, UC, "prs", "2/p+1/q+1/r+1/s<3/2", "", "", "", "length-5 polymorphic list"},

    // length 5, monomorphic
    {"[p,p,p,p,p]", M, UC, "", "5/p<3/2", "p", "edge", "edge", "edge symbol <p,p;5,5>"},
    {"[3,3,3,3,p]", M, UC, "", "1/p<1/6", "p", "[3,3,3,3,p]", "[3,3,3,3,p]", "growth of [3,3,3,3,p]"},
    {"[3,3,3,p,p]", M, UC, "p", "2/p<1/2", "p", "[3,3,3,p,p]", "[3,3,3,p,p]", "growth of [3,3,3,p,p]"},
    {"[3,3,p,3,p]", M, NC, "", "2/p<1/2", "p", "[3,3,p,3,p]", "[3,3,p,3,p]", "non-concentric form [3,3,p,3,p]"},
    {"[3,3,p,3,q]", M, NC, "", "1/p+1/q<1/2", "pq", "[3,3,p,3,q]", "[3,3,p,3,q]", "non-concentric form [3,3,p,3,q]"},
    {"[p,p,q,r,q]", M, UC, "pq", "2/p+2/q+1/r<3/2", "pqr", "[p,p,q,r,q]", "", "lower bound for [p,p,q,r,q]"},
    {"[p,p,q,3,q]", M, UC, "pq", "1/p+1/q<7/12", "pq", "[p,p,q,3,q]", "", "lower bound for [3,p,q,q,p]"},
    {"[p,q,r,s,t]", M, UC, "pqrst", "1/p+1/q+1/r+1/s+1/t<3/2", "pqrst", "[p,q,r,s,t]", "", "lower bound for [p,q,r,s,t]"},

    // length 6, all terms >= 4, polymorphic
    {"[p,p,p,p,p,q]", P, UC, "", "5/p+1/q<2", "", "", "", "length-6 polymorphic list (terms >= 4)"},
    {"[p,p,p,p,q,q]", P, UC, "q", "2/p+1/q<1", "", "", "", "length-6 polymorphic list (terms >= 4)"},
    {"[p,p,p,q,p,q]", P, UC, "", "2/p+1/q<1", "", "", "", "length-6 polymorphic list (terms >= 4)"},
    {"[p,p,p,q,q,q]", P, UC, "", "1/p+1/q<2/3", "", "", "", "length-6 polymorphic list (terms >= 4)"},
    {"[p,p,q,p,q,q]", P, UC, "", "1/p+1/q<2/3", "", "", "", "length-6 polymorphic list (terms >= 4)"},
    {"[p,p,p,p,q,r]", P, UC, "", "4/p+1/q+1/r<2", "", "", "", "length-6 polymorphic list (terms >= 4)"},
    {"[p,p,p,q,p,r]", P, UC, "", "4/p+1/q+1/r<2", "", "", "", "length-6 polymorphic list (terms >= 4)"},
    {"[p,p,q,p,p,r]", P, UC, "p", "4/p+1/q+1/r<2", "", "", "", "length-6 polymorphic list (terms >= 4)"},
    {"[p,p,p,q,q,r]", P, UC, "qr", "3/p+2/q+1/r<2", "", "", "", "length-6 polymorphic list (terms >= 4)"},
    {"[p,p,p,q,r,q]", P, UC, "q", "3/p+2/q+1/r<2", "", "", "", "length-6 polymorphic list (terms >= 4)"},
    {"[p,p,q,p,q,r]", P, UC, "r", "3/p+2/q+1/r<2", "", "", "", "length-6 polymorphic list (terms >= 4)"},
    {"[p,q,p,p,q,r]", P, UC, "r", "3/p+2/q+1/r<2", "", "", "", "length-6 polymorphic list (terms >= 4)"},
    {"[p,p,q,q,p,r]", P, UC, "q", "3/p+2/q+1/r<2", "", "", "", "length-6 polymorphic list (terms >= 4)"},
    {"[p,p,q,q,r,r]", P, UC, "pqr", "1/p+1/q+1/r<1", "", "", "", "length-6 polymorphic list (terms >= 4)"},
    {"[p,p,q,r,q,r]", P, UC, "p", "1/p+1/q+1/r<1", "", "", "", "length-6 polymorphic list (terms >= 4)"},
    {"[p,p,p,q,r,s]", P, UC, "qrs", "3/p+1/q+1/r+1/s<2", "", "", "", "length-6 polymorphic list (terms >= 4)"},
    {"[p,p,q,p,r,s]", P, UC, "rs", "3/p+1/q+1/r+1/s<2", "", "", "", "length-6 polymorphic list (terms >= 4)"},
    {"[p,q,p,r,p,s]", P, UC, "", "3/p+1/q+1/r+1/s<2", "", "", "", "length-6 polymorphic list (terms >= 4)"},
    {"[p,p,q,q,r,s]", P, UC, "pqrs", "2/p+2/q+1/r+1/s<2", "", "", "", "length-6 polymorphic list (terms >= 4)"},
    {"[p,p,q,r,r,s]", P, UC, "pqrs", "2/p+2/q+1/r+1/s<2", "", "", "", "length-6 polymorphic list (terms >= 4)"},
    {"[p,q,r,p,q,s]", P, UC, "pqrs", "2/p+2/q+1/r+1/s<2", "", "", "", "length-6 polymorphic list (terms >= 4)"},
    {"[p,p,q,r,s,t]", P, UC, "pqrst", "2/p+1/q+1/r+1/s+1/t<2", "", "", "", "length-6 polymorphic list (terms >= 4)"},
    {"[p,q,p,r,s,t]", P, UC, "prst", "2/p+1/q+1/r+1/s+1/t<2", "", "", "", "length-6 polymorphic list (terms >= 4)"},

    // length 6, all terms >= 4, monomorphic
    {"[p,p,p,p,p,p]", M, UC, "", "6/p<2", "p", "edge", "edge", "edge symbol <p,p;6,6>"},
    {"[p,p,q,p,p,q]", M, UC, "p", "2/p+1/q<1", "pq", "[p,p,q,p,p,q]", "[p,p,q,p,p,q]", "growth of [p,p,q,p,p,q]"},
    {"[p,q,p,q,p,q]", M, UC, "", "1/p+1/q<2/3", "pq", "edge", "edge", "edge symbol <p,q;6,6>"},
    {"[p,q,q,p,r,r]", M, UC, "pqr", "1/p+1/q+1/r<1", "pqr", "[p,q,q,p,r,r]", "", "lower bound for [p,q,q,p,r,r]"},
    {"[p,q,p,r,q,r]", M, UC, "pr", "1/p+1/q+1/r<1", "pqr", "[p,q,p,r,q,r]", "", "lower bound for [p,q,p,r,q,r]"},
    {"[p,q,r,p,q,r]", M, UC, "pqr", "1/p+1/q+1/r<1", "pqr", "[p,q,r,p,q,r]", "", "lower bound for [p,q,r,p,q,r]"},
    {"[p,q,p,r,s,r]", M, UC, "pr", "2/p+1/q+2/r+1/s<2", "pqrs", "[p,q,p,r,s,r]", "", "lower bound for [p,q,p,r,s,r]"},
    {"[p,q,r,p,s,t]", M, UC, "pqrst", "2/p+1/q+1/r+1/s+1/t<2", "pqrst", "[p,q,r,p,s,t]", "", "lower bound for [p,q,r,p,s,t]"},
    {"[p,q,r,s,t,u]", M, UC, "pqrstu", "1/p+1/q+1/r+1/s+1/t+1/u<2", "pqrstu", "[p,q,r,s,t,u]", "", "lower bound for [p,q,r,s,t,u]"},

    // length 6 with 3-valent terms, polymorphic
    {"[3,3,3,3,3,p]", P, UC, "", "1/p<1/3", "", "", "", "length-6 polymorphic list (3-valent terms)"},
    {"[p,p,p,p,p,3]", P, UC, "", "5/p<5/3", "", "", "", "length-6 polymorphic list (3-valent terms)"},
    {"[3,3,3,3,p,p]", P, UC, "p", "2/p<2/3", "", "", "", "length-6 polymorphic list (3-valent terms)"},
    {"[3,3,3,p,3,p]", P, UC, "", "2/p<2/3", "", "", "", "length-6 polymorphic list (3-valent terms)"},
    {"[p,p,p,3,p,3]", P, UC, "", "4/p<4/3", "", "", "", "length-6 polymorphic list (3-valent terms)"},
    {"[3,3,3,p,p,p]", P, UC, "", "3/p<1", "", "", "", "length-6 polymorphic list (3-valent terms)"},
    {"[3,3,p,3,p,p]", P, UC, "", "3/p<1", "", "", "", "length-6 polymorphic list (3-valent terms)"},
    {"[3,3,3,3,p,q]", P, UC, "pq", "1/p+1/q<2/3", "", "", "", "length-6 polymorphic list (3-valent terms)"},
    {"[3,3,3,p,3,q]", P, UC, "", "1/p+1/q<2/3", "", "", "", "length-6 polymorphic list (3-valent terms)"},
    {"[p,p,p,3,p,q]", P, UC, "", "4/p+1/q<5/3", "", "", "", "length-6 polymorphic list (3-valent terms)"},
    {"[p,p,3,p,p,q]", P, UC, "p", "4/p+1/q<5/3", "", "", "", "length-6 polymorphic list (3-valent terms)"},
    {"[3,3,3,p,p,q]", P, UC, "", "2/p+1/q<1", "", "", "", "length-6 polymorphic list (3-valent terms)"},
    {"[p,p,p,q,3,q]", P, UC, "", "3/p+2/q<5/3", "", "", "", "length-6 polymorphic list (3-valent terms)"},
    {"[p,p,3,p,3,q]", P, UC, "", "3/p+1/q<4/3", "", "", "", "length-6 polymorphic list (3-valent terms)"},
    {"[p,3,p,p,3,q]", P, UC, "", "3/p+1/q<4/3", "", "", "", "length-6 polymorphic list (3-valent terms)"},
    {"[3,3,p,p,3,q]", P, UC, "", "2/p+1/q<1", "", "", "", "length-6 polymorphic list (3-valent terms)"},
    {"[p,p,q,q,p,3]", P, UC, "", "3/p+2/q<5/3", "", "", "", "length-6 polymorphic list (3-valent terms)"},
    {"[p,p,3,q,3,q]", P, UC, "", "2/p+2/q<4/3", "", "", "", "length-6 polymorphic list (3-valent terms)"},
    {"[3,3,3,p,q,r]", P, UC, "", "1/p+1/q+1/r<1", "", "", "", "length-6 polymorphic list (3-valent terms)"},
    {"[p,p,3,p,q,r]", P, UC, "", "3/p+1/q+1/r<5/3", "", "", "", "length-6 polymorphic list (3-valent terms)"},
    {"[p,3,p,q,p,r]", P, UC, "", "3/p+1/q+1/r<5/3", "", "", "", "length-6 polymorphic list (3-valent terms)"},
    {"[p,3,p,q,r,s]", P, UC, "", "2/p+1/q+1/r+1/s<5/3", "", "", "", "length-6 polymorphic list (3-valent terms)"},

    // length 6 with 3-valent terms, monomorphic
    {"[p,p,3,p,p,3]", M, UC, "p", "4/p<4/3", "p", "[p,p,3,p,p,3]", "[p,p,3,p,p,3]", "growth of [3,p,p,3,p,p]"},
    {"[3,p,3,p,3,p]", M, UC, "", "3/p<1", "p", "edge", "edge", "edge symbol <3,p;6,6>"},
    {"[3,3,3,p,q,p]", M, UC, "p", "2/p+1/q<1", "pq", "[3,3,3,p,q,p]", "", "lower bound for [3,3,3,p,q,p]"},
    {"[p,3,p,q,3,q]", M, UC, "pq", "2/p+2/q<4/3", "pq", "[p,3,p,q,3,q]", "", "lower bound for [3,p,q,3,q,p]"},
    {"[3,p,3,q,3,r]", M, UC, "", "1/p+1/q+1/r<1", "pqr", "[3,p,3,q,3,r]", "", "lower bound for [3,p,3,q,3,r]"},
    {"[p,3,p,q,r,q]", M, UC, "pq", "2/p+2/q+1/r<5/3", "pqr", "[p,3,p,q,r,q]", "", "lower bound for [3,p,q,r,q,p]"},
  };
  // clang-format on
  std::vector<FamilyRow> rows;
  for (const auto& sp : specs) {
    FamilyRow r;
    r.pattern = make_pattern(sp.id);
    r.pattern.even = sp.even;
    r.pattern.guard_text = sp.guard;
    r.pattern.guard = make_guard(sp.guard);
    r.pattern.min_of = sp.min_of;
    r.morphism = sp.morph;
    r.concentricity = sp.conc;
    r.root_letters = sp.roots;
    r.matrix_id = sp.matrix;
    r.formula_id = sp.formula;
    r.anchor = sp.anchor;
    rows.push_back(std::move(r));
  }
  return rows;
}

int letter_min(const SequencePattern& p, char v) {
  auto it = p.min_of.find(v);
  int lo = it != p.min_of.end() ? it->second : std::max(4, p.min_value);
  // Letters sit strictly above the literals of their template, unless a
  // per-letter bound explicitly lets them reach down (q = 3 in [p,p,p,q]).
  if (it == p.min_of.end()) lo = std::max(lo, max_literal(p) + 1);
  return lo;
}

// Tries to read `word` (one traversal of a sequence) as the pattern.
// relaxed: letters may take any value >= 3 (used only for parity screening).
std::optional<Bindings> bind(const SequencePattern& p, const std::vector<int>& word, bool relaxed) {
  if (word.size() != p.slots.size()) return std::nullopt;
  Bindings b;
  for (size_t i = 0; i < word.size(); ++i) {
    const Slot& s = p.slots[i];
    if (s.literal) {
      if (word[i] != s.literal) return std::nullopt;
      continue;
    }
    auto it = b.find(s.var);
    if (it == b.end()) {
      b[s.var] = word[i];
    } else if (it->second != word[i]) {
      return std::nullopt;
    }
  }
  std::set<int> seen;
  for (const auto& [v, x] : b) {
    if (!seen.insert(x).second) return std::nullopt;  // distinct letters, distinct values
    if (relaxed) {
      if (x < 3) return std::nullopt;
    } else if (x < letter_min(p, v)) {
      return std::nullopt;
    }
  }
  // Letters never coincide with a literal of the same template; with a 3 on
  // a letter and a literal 3 beside it the reading is a different family.
  for (const auto& s : p.slots)
    if (s.literal && seen.count(s.literal)) return std::nullopt;
  return b;
}

bool parity_ok(const SequencePattern& p, const Bindings& b) {
  for (char v : p.even) {
    auto it = b.find(v);
    if (it != b.end() && it->second % 2) return false;
  }
  return true;
}

// Around a vertex of valence x the incident faces meet it at occurrences of
// x in the sequence.  If every occurrence has the same two distinct
// neighbours {a, b}, those neighbours must alternate around the vertex, so x
// must be even.
bool alternation_parity_ok(const CyclicSequence& s) {
  const int k = s.length();
  std::set<int> values(s.terms().begin(), s.terms().end());
  for (int x : values) {
    if (x % 2 == 0) continue;
    std::set<std::pair<int, int>> pairs;
    bool all_distinct = true;
    for (int i = 0; i < k; ++i) {
      if (s[i] != x) continue;
      int a = s[i - 1], c = s[i + 1];
      if (a == c) all_distinct = false;
      pairs.insert({std::min(a, c), std::max(a, c)});
    }
    if (all_distinct && pairs.size() == 1) return false;
  }
  return true;
}

bool is_edge_homogeneous(const CyclicSequence& s) {
  const int k = s.length();
  for (int i = 0; i < k; ++i)
    if (s[i] != s[i + 2]) return false;
  return k % 2 == 0 || s[0] == s[1];
}

}  // namespace

SequencePattern make_pattern(const std::string& id) {
  SequencePattern p;
  p.id = id;
  std::string body = id;
  if (body.size() < 2 || body.front() != '[' || body.back() != ']')
    throw std::invalid_argument("bad pattern: " + id);
  body = body.substr(1, body.size() - 2);
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) throw std::invalid_argument("bad pattern: " + id);
    Slot s;
    if (std::isdigit(static_cast<unsigned char>(tok[0]))) {
      s.literal = std::stoi(tok);
    } else if (tok.size() == 1 && tok[0] >= 'p' && tok[0] <= 'u') {
      s.var = tok[0];
    } else {
      throw std::invalid_argument("bad slot '" + tok + "' in " + id);
    }
    p.slots.push_back(s);
  }
  if (p.slots.size() < 3) throw std::invalid_argument("pattern too short: " + id);
  return p;
}

const std::vector<FamilyRow>& catalog() {
  static const std::vector<FamilyRow> rows = build_catalog();
  return rows;
}

const FamilyRow* find_family(const std::string& id) {
  for (const auto& r : catalog())
    if (r.pattern.id == id) return &r;
  SequencePattern want;
  try {
    want = make_pattern(id);
  } catch (const std::invalid_argument&) {
    return nullptr;
  }
  const std::string key = structure_key(want);
  for (const auto& r : catalog())
    if (r.pattern.slots.size() == want.slots.size() && structure_key(r.pattern) == key) return &r;
  return nullptr;
}

std::optional<Match> match_pattern(const CyclicSequence& s) {
  std::optional<Match> best;
  int best_lits = -1;
  const auto words = traversals(s.terms());
  for (const auto& row : catalog()) {
    if (static_cast<int>(row.pattern.slots.size()) != s.length()) continue;
    for (const auto& w : words) {
      auto b = bind(row.pattern, w, false);
      if (!b) continue;
      int lits = literal_count(row.pattern);
      if (lits > best_lits) {
        Match m;
        m.row = &row;
        m.bindings = *b;
        m.guard_ok = !row.pattern.guard || row.pattern.guard(*b);
        best = m;
        best_lits = lits;
      }
      break;
    }
  }
  return best;
}

bool in_g44(const CyclicSequence& s) {
  if (s.length() < 4) return false;
  for (int x : s.terms())
    if (x < 4) return false;
  return true;
}

bool in_g3p5(const CyclicSequence& s) {
  if (s.length() < 5) return false;
  for (int i = 0; i < s.length(); ++i) {
    if (s[i] < 3) return false;
    if (s[i] == 3 && s[i + 1] == 3) return false;
  }
  return true;
}

bool in_g36(const CyclicSequence& s) {
  if (s.length() < 6) return false;
  for (int x : s.terms())
    if (x < 3) return false;
  return true;
}

bool polymorphism_sufficient(const CyclicSequence& s) {
  if (!in_g44(s) && !in_g3p5(s))
    throw std::domain_error("sufficient condition needs all terms >= 4, or k >= 5 with no adjacent 3s: " + s.str());
  const int k = s.length();
  for (int i = 0; i < k; ++i) {
    if (s[i] < 4 || s[i + 1] < 4) continue;
    for (int j = 0; j < k; ++j) {
      if (j == i) continue;
      if (s[i] == s[j] && s[i + 1] == s[j + 1] && s[i + 2] != s[j + 2]) return true;
      if (s[i] == s[j] && s[i + 1] == s[j - 1] && s[i + 2] != s[j - 2]) return true;
    }
  }
  return false;
}

Realizability realizability_check(const CyclicSequence& s) {
  if (!alternation_parity_ok(s)) return Realizability::ParityViolation;
  // Parity statements of a family hold whatever the letter values are, so
  // screen against every family this sequence can be read as, including
  // readings that put a 3 on a letter.
  const auto words = traversals(s.terms());
  for (const auto& row : catalog()) {
    if (static_cast<int>(row.pattern.slots.size()) != s.length() || row.pattern.even.empty()) continue;
    for (const auto& w : words) {
      auto b = bind(row.pattern, w, true);
      if (b && !parity_ok(row.pattern, *b)) return Realizability::ParityViolation;
    }
  }
  if (match_pattern(s)) return Realizability::Ok;
  if (s.length() >= 7 && is_edge_homogeneous(s)) return Realizability::Ok;
  return Realizability::Unknown;
}

Classification classify(const CyclicSequence& s) {
  Classification c;
  c.growth_class = growth_class(s);
  if (c.growth_class != GrowthClass::Hyperbolic) {
    c.notes.push_back(std::string("angle excess is ") + (c.growth_class == GrowthClass::Finite ? "negative" : "zero") +
                      "; no hyperbolic verdict");
    return c;
  }
  const auto real = realizability_check(s);
  if (real == Realizability::ParityViolation) {
    c.notes.push_back("parity violation: not realizable");
    return c;
  }

  const int k = s.length();
  if (auto m = match_pattern(s)) {
    c.matched_family = m->row->pattern.id;
    c.bindings = m->bindings;
    if (!m->guard_ok) {
      c.notes.push_back("guard " + m->row->pattern.guard_text + " fails");
    } else {
      c.morphism = m->row->morphism;
      c.concentricity = m->row->concentricity;
      for (char ch : m->row->root_letters) {
        int v = std::isdigit(static_cast<unsigned char>(ch)) ? ch - '0' : m->bindings.at(ch);
        c.root_options.push_back(v);
      }
      if (!c.root_options.empty()) c.recommended_root = c.root_options.front();
    }
  } else if (k >= 7 && is_edge_homogeneous(s)) {
    c.morphism = Morphism::Monomorphic;
    c.concentricity = Concentricity::UniformlyConcentric;
    c.matched_family = s[0] == s[1] ? "[p]^" + std::to_string(k) : "[p,q]^" + std::to_string(k / 2);
    c.bindings['p'] = s[0];
    if (s[0] != s[1]) c.bindings['q'] = s[1];
    c.root_options.push_back(s[0]);
    if (s[0] != s[1]) c.root_options.push_back(s[1]);
    c.recommended_root = s[0];
    c.notes.push_back("edge-homogeneous: the sequence determines the tessellation");
  }

  if (c.morphism == Morphism::Unknown && (in_g44(s) || in_g3p5(s)) && polymorphism_sufficient(s)) {
    c.morphism = Morphism::Polymorphic;
    c.notes.push_back("polymorphic by the repeated-pair sufficient condition");
  }
  if (c.morphism == Morphism::Unknown) {
    if (k >= 7)
      c.notes.push_back("length >= 7 outside the edge-homogeneous forms is not classified; "
                        "growth is bounded below by that of [3,3,3,3,3,3,3]");
    else if (!c.matched_family)
      c.notes.push_back("no catalog form matches this sequence");
  }
  if (c.concentricity == Concentricity::Unknown && (in_g36(s) || in_g3p5(s) || in_g44(s)))
    c.concentricity = Concentricity::UniformlyConcentric;
  return c;
}

std::vector<CyclicSequence> minimal_representatives(const std::string& family_id) {
  const FamilyRow* row = find_family(family_id);
  if (!row) throw std::invalid_argument("unknown family " + family_id);
  const SequencePattern& p = row->pattern;
  const std::string letters = p.letters();
  const int n = static_cast<int>(letters.size());
  // Search window per letter; minimal members sit close to the lower bounds
  // except for the sparse families whose angle excess needs one large term.
  const int hi = n <= 3 ? 24 : 16;

  std::set<std::vector<int>> found;
  std::vector<int> vals(n);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      Bindings b;
      for (int j = 0; j < n; ++j) b[letters[j]] = vals[j];
      auto word = p.instantiate(b);
      CyclicSequence cs(word);
      if (growth_class(cs) != GrowthClass::Hyperbolic) return;
      auto m = match_pattern(cs);
      if (!m || m->row != row || !m->guard_ok) return;
      if (realizability_check(cs) == Realizability::ParityViolation) return;
      found.insert(cs.terms());
      return;
    }
    char v = letters[i];
    bool even = p.even.find(v) != std::string::npos;
    for (int x = letter_min(p, v); x <= hi; ++x) {
      if (even && x % 2) continue;
      bool clash = false;
      for (int j = 0; j < i; ++j) clash |= vals[j] == x;
      if (clash) continue;
      vals[i] = x;
      rec(i + 1);
    }
  };
  rec(0);

  std::vector<CyclicSequence> all;
  for (const auto& w : found) all.emplace_back(w);
  std::vector<CyclicSequence> out;
  for (const auto& a : all) {
    bool minimal = true;
    for (const auto& b : all)
      if (!(a == b) && leq(b, a) == Order::Less) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(a);
  }
  return out;
}

namespace {

nlohmann::json bindings_json(const Bindings& b) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : b) j[std::string(1, k)] = v;
  return j;
}

}  // namespace

std::string classification_json(const CyclicSequence& s, const Classification& c) {
  nlohmann::json j;
  j["sequence"] = s.str();
  j["angle_excess"] = to_string(angle_excess(s));
  j["growth_class"] = to_string(c.growth_class);
  j["realizability"] = to_string(realizability_check(s));
  j["morphism"] = to_string(c.morphism);
  j["concentricity"] = to_string(c.concentricity);
  j["matched_family"] = c.matched_family ? nlohmann::json(*c.matched_family) : nlohmann::json(nullptr);
  j["bindings"] = bindings_json(c.bindings);
  j["recommended_root"] = c.recommended_root ? nlohmann::json(*c.recommended_root) : nlohmann::json(nullptr);
  j["root_options"] = c.root_options;
  j["notes"] = c.notes;
  return j.dump(2);
}

std::string catalog_json() {
  nlohmann::json j;
  j["version"] = 1;
  j["families"] = nlohmann::json::array();
  for (const auto& r : catalog()) {
    nlohmann::json f;
    f["id"] = r.pattern.id;
    f["morphism"] = to_string(r.morphism);
    f["concentricity"] = to_string(r.concentricity);
    f["even"] = r.pattern.even;
    f["guard"] = r.pattern.guard_text;
    nlohmann::json mins = nlohmann::json::object();
    for (const auto& [k, v] : r.pattern.min_of) mins[std::string(1, k)] = v;
    f["min_of"] = mins;
    f["roots"] = r.root_letters;
    f["matrix"] = r.matrix_id;
    f["formula"] = r.formula_id;
    f["anchor"] = r.anchor;
    j["families"].push_back(f);
  }
  return j.dump(2);
}

}  // namespace tg
