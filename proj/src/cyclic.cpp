#include "tessgrowth/cyclic.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tg {

std::vector<std::vector<int>> traversals(const std::vector<int>& w) {
  const int k = static_cast<int>(w.size());
  std::vector<std::vector<int>> out;
  out.reserve(2 * k);
  for (int dir : {1, -1}) {
    for (int r = 0; r < k; ++r) {
      std::vector<int> t(k);
      for (int i = 0; i < k; ++i) t[i] = w[((r + dir * i) % k + k) % k];
      out.push_back(std::move(t));
    }
  }
  return out;
}

CyclicSequence::CyclicSequence(const std::vector<int>& raw) {
  if (raw.size() < 3) throw std::invalid_argument("a cyclic sequence needs at least three terms");
  for (int v : raw)
    if (v < 3) throw std::invalid_argument("valences must be at least 3");
  auto all = traversals(raw);
  terms_ = *std::min_element(all.begin(), all.end());
}

int CyclicSequence::operator[](int i) const {
  const int k = length();
  return terms_[((i % k) + k) % k];
}

std::string CyclicSequence::str() const {
  std::string s = "[";
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(terms_[i]);
  }
  return s + "]";
}

CyclicSequence canonicalize(const std::vector<int>& raw) { return CyclicSequence(raw); }

bool equivalent(const CyclicSequence& a, const CyclicSequence& b) { return a == b; }

const char* to_string(Order o) {
  switch (o) {
    case Order::Less: return "Less";
    case Order::Equal: return "Equal";
    case Order::Greater: return "Greater";
    default: return "Incomparable";
  }
}

bool dominated_by(const CyclicSequence& a, const CyclicSequence& b) {
  if (a.length() > b.length()) return false;
  const auto& at = a.terms();
  // Greedy matching is optimal for "subsequence dominates termwise" once the
  // starting point and direction of b are fixed.
  for (const auto& t : traversals(b.terms())) {
    size_t j = 0;
    bool ok = true;
    for (int need : at) {
      while (j < t.size() && t[j] < need) ++j;
      if (j == t.size()) { ok = false; break; }
      ++j;
    }
    if (ok) return true;
  }
  return false;
}

Order leq(const CyclicSequence& a, const CyclicSequence& b) {
  if (a == b) return Order::Equal;
  if (dominated_by(a, b)) return Order::Less;
  if (dominated_by(b, a)) return Order::Greater;
  return Order::Incomparable;
}

Rational angle_excess(const CyclicSequence& s) {
  Rational eta = -2;
  for (int p : s.terms()) eta += Rational(p - 2, p);
  return eta;
}

const char* to_string(GrowthClass g) {
  switch (g) {
    case GrowthClass::Finite: return "Finite";
    case GrowthClass::Euclidean: return "Euclidean";
    default: return "Hyperbolic";
  }
}

GrowthClass growth_class(const CyclicSequence& s) {
  int sg = angle_excess(s).sign();
  if (sg < 0) return GrowthClass::Finite;
  if (sg == 0) return GrowthClass::Euclidean;
  return GrowthClass::Hyperbolic;
}

std::vector<int> parse_sequence(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw std::invalid_argument("expected a sequence like [4,6,14]: " + text);
  std::vector<int> out;
  std::stringstream ss(t.substr(1, t.size() - 2));
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit))
      throw std::invalid_argument("bad term '" + item + "' in " + text);
    if (item.size() > 6) throw std::invalid_argument("term too large in " + text);
    out.push_back(std::stoi(item));
  }
  return out;
}

}  // namespace tg
