#include "tessgrowth/formulas.hpp"

#include "tessgrowth/transition.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace tg {

std::string EdgeSymbol::str() const {
  return "<" + std::to_string(p) + "," + std::to_string(q) + ";" + std::to_string(k) + "," + std::to_string(l) + ">";
}

bool edge_symbol_exists(const EdgeSymbol& e) {
  if (std::min({e.p, e.q, e.k, e.l}) < 3) return false;
  auto even = [](int x) { return x % 2 == 0; };
  int cases = 0;
  if (even(e.p) && even(e.q) && even(e.k) && even(e.l)) ++cases;
  if (e.k == e.l && even(e.k) && (!even(e.p) || !even(e.q))) ++cases;
  if (e.p == e.q && even(e.p) && (!even(e.k) || !even(e.l))) ++cases;
  if (e.p == e.q && e.k == e.l && !even(e.p) && !even(e.k)) ++cases;
  return cases == 1;
}

std::optional<EdgeSymbol> edge_symbol_of(const CyclicSequence& s) {
  if (!edge_homogeneous(s)) return std::nullopt;
  return EdgeSymbol{s[0], s[1], s.length(), s.length()};
}

double g_of_t(const Rational& t) {
  const double x = to_double(t) - 2;
  return 0.5 * (x + std::sqrt(x * x - 4));
}

Rational edge_t(const EdgeSymbol& e) {
  return (Rational(e.p + e.q, 2) - 2) * (Rational(e.k + e.l, 2) - 2);
}

namespace {

bool is_3p44(int p, int q, int k, int l) {
  return k == 4 && l == 4 && std::min(p, q) == 3 && std::max(p, q) >= 6;
}

// Interval around a double known to ~1e-13 relative accuracy.
GrowthRate wrap(double x, RateSource src) {
  GrowthRate g;
  g.value = x;
  g.source = src;
  const double w = 1e-11 * std::max(1.0, std::fabs(x));
  g.lo = from_double(x - w);
  g.hi = from_double(x + w);
  return g;
}

double sq(double x) { return x * x; }

}  // namespace

GrowthRate edge_homogeneous_growth(const EdgeSymbol& e) {
  if (!edge_symbol_exists(e)) throw std::invalid_argument("no edge-homogeneous tessellation with symbol " + e.str());
  Rational t = edge_t(e);
  if (is_3p44(e.p, e.q, e.k, e.l) || is_3p44(e.k, e.l, e.p, e.q)) t -= 1;
  if (t < 4) throw std::invalid_argument("edge symbol " + e.str() + " is not hyperbolic");
  return wrap(g_of_t(t), RateSource::EdgeHomogeneous);
}

namespace {

double v(const Bindings& b, char c) { return b.at(c); }

std::vector<ClosedFormEntry> build_forms() {
  using P = std::pair<Rational, Rational>;
  auto R = [](const Bindings& b, char c) { return Rational(b.at(c)); };
  std::vector<ClosedFormEntry> f;

  f.push_back({"[p,p,p]", "((p-4) + sqrt((p-4)^2 - 4)) / 2", "growth of [p,p,p]",
               [](const Bindings& b) { double p = v(b, 'p'); return 0.5 * (p - 4 + std::sqrt(sq(p - 4) - 4)); }, {}});
  f.push_back({"[p,p,3]", "(p - 8 + sqrt((p-8)^2 - 16)) / 4", "non-concentric form [3,p,p]; halved system",
               [](const Bindings& b) { double p = v(b, 'p'); return 0.25 * (p - 8 + std::sqrt(sq(p - 8) - 16)); }, {}});
  f.push_back({"[p,p,q]", "palindromic quartic, a = (p-4)/2, b = ((p-4)(q-4)-4)/2", "growth of [p,p,q]",
               [](const Bindings& b) {
                 double a = (v(b, 'p') - 4) / 2, c = ((v(b, 'p') - 4) * (v(b, 'q') - 4) - 4) / 2;
                 double A = a + std::sqrt(a * a + 4 * c + 8);
                 return 0.25 * (A + std::sqrt(A * A - 16));
               },
               [R](const Bindings& b) {
                 return P{(R(b, 'p') - 4) / 2, ((R(b, 'p') - 4) * (R(b, 'q') - 4) - 4) / 2};
               }});
  f.push_back({"[4,p,q]", "sqrt(2(p-4)(q-4) - 16 + 2 sqrt((p-4)^2(q-4)^2 - 16(p-4)(q-4))) / 4",
               "non-concentric form [4,p,q]",
               [](const Bindings& b) {
                 double m = (v(b, 'p') - 4) * (v(b, 'q') - 4);
                 return 0.25 * std::sqrt(2 * m - 16 + 2 * std::sqrt(m * m - 16 * m));
               }, {}});
  f.push_back({"[p,p,p,p]", "(p-3) + sqrt((p-3)^2 - 1)", "edge symbol <p,p;4,4>",
               [](const Bindings& b) { double p = v(b, 'p'); return p - 3 + std::sqrt(sq(p - 3) - 1); }, {}});
  // The inner radicand carries a +256 that the printed statement drops; the
  // quartic factor of the characteristic polynomial needs it.
  f.push_back({"[p,p,q,q]",
               "(p+q+a-8 + sqrt(2(p^2+q^2) + 36pq - 112(p+q) + 256 + 2a(p+q-8))) / 8, "
               "a = sqrt(p^2 + 34pq + q^2 - 96p - 96q + 256)",
               "growth of [p,p,q,q]",
               [](const Bindings& b) {
                 double p = v(b, 'p'), q = v(b, 'q');
                 double a = std::sqrt(p * p + 34 * p * q + q * q - 96 * p - 96 * q + 256);
                 return (p + q + a - 8 +
                         std::sqrt(2 * (p * p + q * q) + 36 * p * q - 112 * (p + q) + 256 + 2 * a * (p + q - 8))) / 8;
               },
               [R](const Bindings& b) {
                 Rational p = R(b, 'p'), q = R(b, 'q');
                 return P{(p + q - 8) / 2, (4 * p * q - 10 * p - 10 * q + 20) / 2};
               }});
  f.push_back({"[3,p,3,p]", "(p-4 + sqrt((p-4)^2 - 4)) / 2", "edge symbol <3,p;4,4>",
               [](const Bindings& b) { double p = v(b, 'p'); return 0.5 * (p - 4 + std::sqrt(sq(p - 4) - 4)); }, {}});
  f.push_back({"[p,q,p,q]", "(p+q-6 + sqrt((p+q-6)^2 - 4)) / 2", "edge symbol <p,q;4,4>",
               [](const Bindings& b) {
                 double s = v(b, 'p') + v(b, 'q') - 6;
                 return 0.5 * (s + std::sqrt(s * s - 4));
               }, {}});
  f.push_back({"[3,p,4,p]", "(p-3 + sqrt(p^2-4p+1) + sqrt(2p^2 - 10p - 6 + 2(p-3) sqrt(p^2-4p+1))) / 4",
               "non-concentric form [3,p,4,p]",
               [](const Bindings& b) {
                 double p = v(b, 'p'), r = std::sqrt(p * p - 4 * p + 1);
                 return 0.25 * (p - 3 + r + std::sqrt(2 * p * p - 10 * p - 6 + 2 * (p - 3) * r));
               },
               [R](const Bindings& b) { return P{R(b, 'p') - 3, (R(b, 'p') - 8) / 2}; }});
  f.push_back({"[3,p,q,p]",
               "(p-4 + a + sqrt(2p^2 + 2pq - 18p - 4q + 16 + a(2p-8))) / 4, a = sqrt(p^2 + 2pq - 10p - 4q + 16)",
               "growth of [3,p,q,p]",
               [](const Bindings& b) {
                 double p = v(b, 'p'), q = v(b, 'q');
                 double a = std::sqrt(p * p + 2 * p * q - 10 * p - 4 * q + 16);
                 return 0.25 * (p - 4 + a + std::sqrt(2 * p * p + 2 * p * q - 18 * p - 4 * q + 16 + a * (2 * p - 8)));
               },
               [R](const Bindings& b) {
                 Rational p = R(b, 'p'), q = R(b, 'q');
                 return P{p - 4, (p * q - p - 2 * q - 4) / 2};
               }});
  f.push_back({"[p,q,p,r]",
               "(p-4 + a + sqrt(2p^2 + 2pq + 2pr + 4qr - 24p - 16q - 16r + 64 + a(2p-8))) / 4, "
               "a = sqrt(p^2 + 2pq + 2pr + 4qr - 16p - 16q - 16r + 64)",
               "growth of [p,q,p,r]",
               [](const Bindings& b) {
                 double p = v(b, 'p'), q = v(b, 'q'), r = v(b, 'r');
                 double a = std::sqrt(p * p + 2 * p * q + 2 * p * r + 4 * q * r - 16 * p - 16 * q - 16 * r + 64);
                 return 0.25 * (p - 4 + a +
                                std::sqrt(2 * p * p + 2 * p * q + 2 * p * r + 4 * q * r - 24 * p - 16 * q - 16 * r + 64 +
                                          a * (2 * p - 8)));
               },
               [R](const Bindings& b) {
                 Rational p = R(b, 'p'), q = R(b, 'q'), r = R(b, 'r');
                 return P{p - 4, (p * q + p * r + 2 * q * r - 4 * p - 8 * q - 8 * r + 20) / 2};
               }});
  f.push_back({"[p,p,p,p,p]", "(3p - 8 + sqrt(9p^2 - 48p + 60)) / 2", "edge symbol <p,p;5,5>",
               [](const Bindings& b) { double p = v(b, 'p'); return 0.5 * (3 * p - 8 + std::sqrt(9 * p * p - 48 * p + 60)); }, {}});
  f.push_back({"[3,3,3,3,p]", "sqrt(2(p-4) + 2 sqrt((p-5)(p-2))) / 2", "growth of [3,3,3,3,p]",
               [](const Bindings& b) {
                 double p = v(b, 'p');
                 return 0.5 * std::sqrt(2 * (p - 4) + 2 * std::sqrt((p - 5) * (p - 2)));
               }, {}});
  f.push_back({"[3,3,3,p,p]", "(p - 4 + r + sqrt(2(p-4)(p+16+r))) / 8, r = sqrt(p^2 + 32p - 80)", "growth of [3,3,3,p,p]",
               [](const Bindings& b) {
                 double p = v(b, 'p'), r = std::sqrt(p * p + 32 * p - 80);
                 return (p - 4 + r + std::sqrt(2 * (p - 4) * (p + 16 + r))) / 8;
               },
               [R](const Bindings& b) { return P{(R(b, 'p') - 4) / 2, (5 * R(b, 'p') - 16) / 2}; }});
  f.push_back({"[3,3,p,3,p]", "(p-2 + sqrt((p-2)^2 - 4)) / 2", "non-concentric form [3,3,p,3,p]",
               [](const Bindings& b) { double p = v(b, 'p'); return 0.5 * (p - 2 + std::sqrt(sq(p - 2) - 4)); }, {}});
  f.push_back({"[3,3,p,3,q]", "sqrt(2(p-2)(q-2) - 4 + 2 sqrt((p-2)^2(q-2)^2 - 4(p-2)(q-2))) / 2",
               "non-concentric form [3,3,p,3,q]",
               [](const Bindings& b) {
                 double m = (v(b, 'p') - 2) * (v(b, 'q') - 2);
                 return 0.5 * std::sqrt(2 * m - 4 + 2 * std::sqrt(m * m - 4 * m));
               }, {}});
  f.push_back({"[p,p,p,p,p,p]", "2p - 5 + 2 sqrt(p^2 - 5p + 6)", "edge symbol <p,p;6,6>",
               [](const Bindings& b) { double p = v(b, 'p'); return 2 * p - 5 + 2 * std::sqrt(p * p - 5 * p + 6); }, {}});
  f.push_back({"[p,p,q,p,p,q]",
               "(a + b + sqrt(2ab + 2b^2 + 32pq - 112p - 96q + 256)) / 8, a = sqrt((p+2q-8)(25p+2q-72)), b = 5p+2q-16",
               "growth of [p,p,q,p,p,q]",
               [](const Bindings& b) {
                 double p = v(b, 'p'), q = v(b, 'q');
                 double a = std::sqrt((p + 2 * q - 8) * (25 * p + 2 * q - 72)), c = 5 * p + 2 * q - 16;
                 return (a + c + std::sqrt(2 * a * c + 2 * c * c + 32 * p * q - 112 * p - 96 * q + 256)) / 8;
               },
               [R](const Bindings& b) {
                 Rational p = R(b, 'p'), q = R(b, 'q');
                 return P{Rational(5, 2) * p + q - 8, 2 * p * q - 7 * p - 6 * q + 18};
               }});
  f.push_back({"[p,q,p,q,p,q]", "p + q - 5 + sqrt((p+q-4)(p+q-6))", "edge symbol <p,q;6,6>",
               [](const Bindings& b) {
                 double s = v(b, 'p') + v(b, 'q');
                 return s - 5 + std::sqrt((s - 4) * (s - 6));
               }, {}});
  // a = sqrt(25p^2 - 116p + 132); the printed statement lost the p on 116.
  f.push_back({"[p,p,3,p,p,3]", "(5p - 10 + a + sqrt(50p^2 + (10a - 216)p - 20a + 168)) / 8, a = sqrt(25p^2 - 116p + 132)",
               "growth of [3,p,p,3,p,p]",
               [](const Bindings& b) {
                 double p = v(b, 'p'), a = std::sqrt(25 * p * p - 116 * p + 132);
                 return (5 * p - 10 + a + std::sqrt(50 * p * p + (10 * a - 216) * p - 20 * a + 168)) / 8;
               },
               [R](const Bindings& b) { return P{(5 * R(b, 'p') - 10) / 2, -R(b, 'p')}; }});
  f.push_back({"[3,p,3,p,3,p]", "p - 2 + sqrt((p-2)^2 - 1)", "edge symbol <3,p;6,6>",
               [](const Bindings& b) { double p = v(b, 'p'); return p - 2 + std::sqrt(sq(p - 2) - 1); }, {}});
  return f;
}

}  // namespace

const std::vector<ClosedFormEntry>& closed_forms() {
  static const std::vector<ClosedFormEntry> forms = build_forms();
  return forms;
}

const ClosedFormEntry* find_closed_form(const std::string& family_id) {
  for (const auto& f : closed_forms())
    if (f.family_id == family_id) return &f;
  return nullptr;
}

std::optional<GrowthRate> closed_form_gamma(const CyclicSequence& s) {
  if (growth_class(s) != GrowthClass::Hyperbolic) return std::nullopt;
  auto m = match_pattern(s);
  if (m) {
    if (!m->guard_ok || m->row->formula_id.empty()) return std::nullopt;
    const ClosedFormEntry* f = find_closed_form(m->row->pattern.id);
    if (!f) return std::nullopt;
    return wrap(f->eval(m->bindings), RateSource::ClosedForm);
  }
  if (s.length() >= 7) {
    if (auto e = edge_symbol_of(s)) {
      if (!edge_symbol_exists(*e)) return std::nullopt;
      return edge_homogeneous_growth(*e);
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

std::string truncated4(double x) { return truncated_string(x, 4); }

namespace {

struct PrintedRow {
  const char* family;
  std::vector<int> seq;
  const char* value;
  bool bold;
};

const std::vector<PrintedRow>& printed_least_growth() {
  static const std::vector<PrintedRow> rows = {
      {"[p,p,p]", {7, 7, 7}, "2.6180", false},
      {"[3,p,p]", {3, 14, 14}, "2.6180", false},
      {"[p,p,q]", {6, 6, 7}, "1.722", false},
      {"[4,p,q]", {4, 6, 14}, "1.6180", true},
      {"[p,q,r]", {6, 8, 10}, "3.4789", false},
      {"[p,p,p,p]", {5, 5, 5, 5}, "3.7320", false},
      {"[p,p,q,q]", {4, 4, 6, 6}, "3.4081", false},
      {"[3,p,3,p]", {3, 7, 3, 7}, "2.6180", false},
      {"[p,q,p,q]", {4, 5, 4, 5}, "2.6180", false},
      {"[3,p,4,p]", {3, 6, 4, 6}, "2.9655", false},
      {"[3,p,q,p]", {3, 4, 7, 4}, "1.6180", true},
      {"[p,q,p,r]", {4, 5, 4, 6}, "3.1462", false},
      {"[p,q,r,s]", {4, 6, 10, 8}, "7.0367", false},
      {"[p,p,p,p,p]", {4, 4, 4, 4, 4}, "3.7320", false},
      {"[3,3,3,3,p]", {3, 3, 3, 3, 7}, "1.7553", false},
      {"[3,3,3,p,p]", {3, 3, 3, 6, 6}, "3.0217", false},
      {"[3,3,p,3,p]", {3, 3, 5, 3, 5}, "2.6180", false},
      {"[3,3,p,3,q]", {3, 3, 4, 3, 5}, "1.9318", false},
      {"[p,p,q,r,q]", {4, 4, 6, 5, 6}, "6.6650", false},
      {"[3,p,q,q,p]", {3, 4, 6, 6, 4}, "4.9911", false},
      {"[p,q,r,s,t]", {4, 6, 10, 12, 8}, "14.5753", false},
      {"[p,p,p,p,p,p]", {4, 4, 4, 4, 4, 4}, "5.8284", false},
      {"[p,p,q,p,p,q]", {4, 4, 5, 4, 4, 5}, "7.1347", false},
      {"[p,q,p,q,p,q]", {4, 5, 4, 5, 4, 5}, "7.8729", false},
      {"[p,q,q,p,r,r]", {6, 4, 4, 6, 8, 8}, "13.1291", false},
      {"[p,q,p,r,q,r]", {4, 5, 4, 6, 5, 6}, "9.8115", false},
      {"[p,q,r,p,q,r]", {4, 6, 8, 4, 6, 8}, "13.5612", false},
      {"[p,q,p,r,s,r]", {4, 5, 4, 6, 7, 6}, "10.9033", false},
      {"[p,q,r,p,s,t]", {4, 6, 8, 4, 10, 12}, "18.1174", false},
      {"[p,q,r,s,t,u]", {4, 6, 10, 14, 12, 8}, "23.9963", false},
      {"[3,p,p,3,p,p]", {3, 4, 4, 3, 4, 4}, "4.3306", false},
      {"[3,p,3,p,3,p]", {3, 4, 3, 4, 3, 4}, "3.7320", false},
      {"[3,3,3,p,q,p]", {3, 3, 3, 4, 5, 4}, "4.0265", false},
      {"[3,p,q,3,q,p]", {3, 4, 6, 3, 6, 4}, "6.8091", false},
      {"[3,p,3,q,3,r]", {3, 4, 3, 5, 3, 6}, "5.6723", false},
      {"[3,p,q,r,q,p]", {3, 4, 6, 5, 6, 4}, "8.0601", false},
  };
  return rows;
}

int decimals_of(const std::string& s) {
  auto dot = s.find('.');
  return dot == std::string::npos ? 0 : static_cast<int>(s.size() - dot - 1);
}

}  // namespace

std::vector<LeastGrowthRow> least_growth_table() {
  std::vector<LeastGrowthRow> out;
  for (const auto& p : printed_least_growth()) {
    LeastGrowthRow r{p.family, CyclicSequence(p.seq), p.value, 0, {}, false, false, {}};
    r.bold = p.bold;
    try {
      r.computed = growth_rate(r.minimal).value;
      r.computed_str = truncated_string(r.computed, decimals_of(p.value));
      r.matches = r.computed_str == p.value;
    } catch (const std::exception& e) {
      r.error = e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

std::vector<MinimalRow> minimal_table(const std::vector<std::pair<std::vector<int>, const char*>>& printed) {
  std::vector<MinimalRow> out;
  double best = 1e300;
  size_t best_i = 0;
  for (const auto& [seq, val] : printed) {
    MinimalRow r{CyclicSequence(seq), val};
    r.computed = growth_rate(r.sequence).value;
    const std::string printed4 = r.printed.substr(0, r.printed.find('.') + 5);
    r.matches = truncated4(r.computed) == printed4;
    if (r.computed < best) {
      best = r.computed;
      best_i = out.size();
    }
    out.push_back(std::move(r));
  }
  if (!out.empty()) out[best_i].starred = true;
  return out;
}

}  // namespace

std::vector<MinimalRow> pqrst_minimal_table() {
  return minimal_table({
      {{4, 6, 8, 10, 12}, "14.8673"}, {{4, 6, 8, 12, 10}, "14.6868"}, {{4, 6, 10, 8, 12}, "15.1157"},
      {{4, 6, 10, 12, 8}, "14.5753"}, {{4, 6, 12, 8, 10}, "15.0199"}, {{4, 6, 12, 10, 8}, "14.6594"},
      {{4, 8, 6, 10, 12}, "15.1938"}, {{4, 8, 6, 12, 10}, "15.0988"}, {{4, 8, 10, 6, 12}, "15.5192"},
      {{4, 8, 12, 6, 10}, "15.3442"}, {{4, 10, 6, 8, 12}, "15.5443"}, {{4, 10, 8, 6, 12}, "15.6248"},
  });
}

std::vector<MinimalRow> pqrstu_minimal_table() {
  return minimal_table({
      {{4, 6, 8, 10, 12, 14}, "24.41712251"}, {{4, 6, 8, 10, 14, 12}, "24.21960545"},
      {{4, 6, 8, 12, 10, 14}, "24.61270141"}, {{4, 6, 8, 12, 14, 10}, "24.08285752"},
      {{4, 6, 8, 14, 10, 12}, "24.48957224"}, {{4, 6, 8, 14, 12, 10}, "24.15679180"},
      {{4, 6, 10, 8, 12, 14}, "24.58261968"}, {{4, 6, 10, 8, 14, 12}, "24.45332058"},
      {{4, 6, 10, 12, 8, 14}, "24.85506399"}, {{4, 6, 10, 12, 14, 8}, "24.04416760"},
      {{4, 6, 10, 14, 8, 12}, "24.68019759"}, {{4, 6, 10, 14, 12, 8}, "23.99630569"},
      {{4, 6, 12, 8, 10, 14}, "24.80458415"}, {{4, 6, 12, 8, 14, 10}, "24.54658791"},
      {{4, 6, 12, 10, 8, 14}, "24.88247982"}, {{4, 6, 12, 10, 14, 8}, "24.27525170"},
      {{4, 6, 12, 14, 8, 10}, "24.41387775"}, {{4, 6, 12, 14, 10, 8}, "24.06126298"},
      {{4, 6, 14, 8, 10, 12}, "24.78717089"}, {{4, 6, 14, 8, 12, 10}, "24.65801011"},
      {{4, 6, 14, 10, 8, 12}, "24.74623904"}, {{4, 6, 14, 10, 12, 8}, "24.33423320"},
      {{4, 6, 14, 12, 8, 10}, "24.45269393"}, {{4, 6, 14, 12, 10, 8}, "24.16830858"},
      {{4, 8, 6, 10, 12, 14}, "24.71739812"}, {{4, 8, 6, 10, 14, 12}, "24.50356321"},
      {{4, 8, 6, 12, 10, 14}, "24.99665188"}, {{4, 8, 6, 12, 14, 10}, "24.43259325"},
      {{4, 8, 6, 14, 10, 12}, "24.93312365"}, {{4, 8, 6, 14, 12, 10}, "24.58265856"},
      {{4, 8, 10, 6, 12, 14}, "24.87880785"}, {{4, 8, 10, 6, 14, 12}, "24.80899840"},
      {{4, 8, 10, 12, 6, 14}, "25.35303706"}, {{4, 8, 10, 14, 6, 12}, "25.18185562"},
      {{4, 8, 12, 6, 10, 14}, "25.03584620"}, {{4, 8, 12, 6, 14, 10}, "24.90132812"},
      {{4, 8, 12, 10, 6, 14}, "25.23325447"}, {{4, 8, 12, 14, 6, 10}, "24.77199967"},
      {{4, 8, 14, 6, 10, 12}, "25.01874720"}, {{4, 8, 14, 6, 12, 10}, "24.95377767"},
      {{4, 8, 14, 10, 6, 12}, "24.96611444"}, {{4, 8, 14, 12, 6, 10}, "24.67581103"},
      {{4, 10, 6, 8, 12, 14}, "24.98236812"}, {{4, 10, 6, 8, 14, 12}, "24.82334169"},
      {{4, 10, 6, 12, 8, 14}, "25.58786488"}, {{4, 10, 6, 14, 8, 12}, "25.52589967"},
      {{4, 10, 8, 6, 12, 14}, "24.98070079"}, {{4, 10, 8, 6, 14, 12}, "24.89788355"},
      {{4, 10, 8, 12, 6, 14}, "25.70437512"}, {{4, 10, 8, 14, 6, 12}, "25.58679602"},
      {{4, 10, 12, 6, 8, 14}, "25.18902550"}, {{4, 10, 12, 8, 6, 14}, "25.30889683"},
      {{4, 10, 14, 6, 8, 12}, "25.05471909"}, {{4, 10, 14, 8, 6, 12}, "25.04268293"},
      {{4, 12, 6, 8, 10, 14}, "25.38856036"}, {{4, 12, 6, 10, 8, 14}, "25.71589810"},
      {{4, 12, 8, 6, 10, 14}, "25.24072240"}, {{4, 12, 8, 10, 6, 14}, "25.77151261"},
      {{4, 12, 10, 6, 8, 14}, "25.29247408"}, {{4, 12, 10, 8, 6, 14}, "25.49621988"},
  });
}

// ---------------------------------------------------------------------------

std::vector<Bindings> admissible_bindings(const std::string& family_id, int count) {
  const FamilyRow* row = find_family(family_id);
  if (!row) throw std::invalid_argument("unknown family " + family_id);
  const std::string letters = row->pattern.letters();
  const int n = static_cast<int>(letters.size());
  std::vector<Bindings> out;
  std::set<CyclicSequence> seen;
  if (n == 0) return out;

  // Grow the search box until enough members turn up; enumerate by total.
  for (int hi = 12; hi <= 96 && static_cast<int>(out.size()) < count; hi += 12) {
    std::vector<std::pair<int, Bindings>> found;
    std::vector<int> lo(n, 3), step(n, 1);
    for (int i = 0; i < n; ++i)
      if (row->pattern.even.find(letters[i]) != std::string::npos) lo[i] = 4, step[i] = 2;
    std::vector<int> val = lo;
    while (true) {
      bool distinct = true;
      for (int i = 0; i < n && distinct; ++i)
        for (int j = 0; j < i; ++j) distinct &= val[i] != val[j];
      if (distinct) {
        Bindings b;
        for (int i = 0; i < n; ++i) b[letters[i]] = val[i];
        try {
          CyclicSequence s(row->pattern.instantiate(b));
          if (!seen.count(s) && growth_class(s) == GrowthClass::Hyperbolic &&
              realizability_check(s) != Realizability::ParityViolation) {
            auto m = match_pattern(s);
            if (m && m->row == row && m->guard_ok) {
              int total = 0;
              for (int x : val) total += x;
              found.push_back({total, m->bindings});
              seen.insert(s);
            }
          }
        } catch (const std::invalid_argument&) {
        }
      }
      int i = 0;
      while (i < n && (val[i] += step[i]) > hi) val[i] = lo[i], ++i;
      if (i == n) break;
    }
    std::stable_sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& f : found) out.push_back(f.second);
  }
  if (static_cast<int>(out.size()) > count) out.resize(count);
  return out;
}

std::vector<std::string> consistency_families() {
  std::vector<std::string> ids;
  for (const auto& row : catalog())
    if (row.morphism == Morphism::Monomorphic && !row.formula_id.empty() && !row.matrix_id.empty() &&
        find_closed_form(row.pattern.id))
      ids.push_back(row.pattern.id);
  return ids;
}

ConsistencyReport verify_consistency(const std::string& family_id, int count, double tol) {
  ConsistencyReport rep;
  rep.family_id = family_id;
  const ClosedFormEntry* f = find_closed_form(family_id);
  if (!f) throw std::invalid_argument("no closed form for " + family_id);
  const FamilyRow* row = find_family(family_id);
  for (const auto& b : admissible_bindings(family_id, count)) {
    CyclicSequence s(row->pattern.instantiate(b));
    ConsistencyCase c{b, s, f->eval(b), growth_rate(s).value};
    ++rep.tested;
    double d = std::fabs(c.closed - c.spectral);
    if (!(d <= rep.max_diff)) rep.max_diff = std::isnan(d) ? INFINITY : d;
    if (!(d <= tol)) rep.mismatches.push_back(c);
  }
  return rep;
}

}  // namespace tg
