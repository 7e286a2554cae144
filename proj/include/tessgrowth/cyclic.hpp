// Cyclic valence sequences: canonical form, the domination order and the
// angle excess.
#pragma once

#include "tessgrowth/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace tg {

class CyclicSequence {
 public:
  // Canonicalizes; throws std::invalid_argument on bad input.
  explicit CyclicSequence(const std::vector<int>& raw);

  const std::vector<int>& terms() const { return terms_; }
  int length() const { return static_cast<int>(terms_.size()); }
  int operator[](int i) const;  // cyclic index, i may be negative
  std::string str() const;

  bool operator==(const CyclicSequence& o) const { return terms_ == o.terms_; }
  bool operator<(const CyclicSequence& o) const { return terms_ < o.terms_; }

 private:
  std::vector<int> terms_;
};

// All 2k rotations/reflections of a word, rotation-major then reflected.
std::vector<std::vector<int>> traversals(const std::vector<int>& w);

CyclicSequence canonicalize(const std::vector<int>& raw);
bool equivalent(const CyclicSequence& a, const CyclicSequence& b);

enum class Order { Less, Equal, Greater, Incomparable };
const char* to_string(Order o);

// true when some cyclic subsequence of b (either direction) dominates a.
bool dominated_by(const CyclicSequence& a, const CyclicSequence& b);
Order leq(const CyclicSequence& a, const CyclicSequence& b);

Rational angle_excess(const CyclicSequence& s);

enum class GrowthClass { Finite, Euclidean, Hyperbolic };
const char* to_string(GrowthClass g);
GrowthClass growth_class(const CyclicSequence& s);

// "[4,6,14]" (whitespace tolerated). Throws std::invalid_argument.
std::vector<int> parse_sequence(const std::string& text);

}  // namespace tg
