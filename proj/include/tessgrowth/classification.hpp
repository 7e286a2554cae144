// Monomorphic/polymorphic and concentricity verdicts from a catalog of
// sequence families.
#pragma once

#include "tessgrowth/cyclic.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tg {

enum class Morphism { Monomorphic, Polymorphic, Unknown };
enum class Concentricity { UniformlyConcentric, NonConcentric, Unknown };
enum class Realizability { Ok, ParityViolation, Unknown };
const char* to_string(Morphism m);
const char* to_string(Concentricity c);
const char* to_string(Realizability r);

// One slot of a family template: a literal valence (3 or 4) or a letter.
struct Slot {
  int literal = 0;   // nonzero for literal slots
  char var = 0;      // 'p'..'u' for variable slots
};

using Bindings = std::map<char, int>;

struct SequencePattern {
  std::string id;                 // e.g. "[p,p,q]"
  std::vector<Slot> slots;
  std::string even;               // letters that must be even
  std::string guard_text;         // human-readable inequality guard, may be empty
  std::function<bool(const Bindings&)> guard;  // exact check; empty = none
  int min_value = 0;              // extra lower bound on every letter (0 = default)
  std::map<char, int> min_of;     // per-letter lower bounds

  int arity() const;              // number of distinct letters
  std::string letters() const;    // distinct letters in order of first appearance
  std::vector<int> instantiate(const Bindings& b) const;
};

SequencePattern make_pattern(const std::string& id);

struct FamilyRow {
  SequencePattern pattern;
  Morphism morphism = Morphism::Unknown;
  Concentricity concentricity = Concentricity::Unknown;
  std::string root_letters;       // recommended root valence(s), e.g. "pq"
  std::string matrix_id;          // empty when no matrix is catalogued
  std::string formula_id;         // empty when no closed form
  std::string anchor;             // where the row comes from
};

const std::vector<FamilyRow>& catalog();
const FamilyRow* find_family(const std::string& id);

struct Match {
  const FamilyRow* row = nullptr;
  Bindings bindings;
  bool guard_ok = true;           // exact inequality guard satisfied
};

// Unique catalog family whose equality structure and literal slots fit s.
std::optional<Match> match_pattern(const CyclicSequence& s);

struct Classification {
  GrowthClass growth_class = GrowthClass::Hyperbolic;
  Morphism morphism = Morphism::Unknown;
  Concentricity concentricity = Concentricity::Unknown;
  std::optional<std::string> matched_family;
  Bindings bindings;
  std::optional<int> recommended_root;
  std::vector<int> root_options;  // every recommended root valence
  std::vector<std::string> notes;
};

Classification classify(const CyclicSequence& s);

// true when some i != j have p_i = p_j, p_{i+1} = p_{j+1}, p_{i+2} != p_{j+2}
// (either direction) with p_i, p_{i+1} >= 4.  Throws std::domain_error when s
// is outside G_{4,4} and G_{3+,5}.
bool polymorphism_sufficient(const CyclicSequence& s);
bool in_g44(const CyclicSequence& s);
bool in_g3p5(const CyclicSequence& s);
bool in_g36(const CyclicSequence& s);

Realizability realizability_check(const CyclicSequence& s);

// Pairwise incomparable minimal admissible members of a family.
std::vector<CyclicSequence> minimal_representatives(const std::string& family_id);

std::string classification_json(const CyclicSequence& s, const Classification& c);
std::string catalog_json();

}  // namespace tg
