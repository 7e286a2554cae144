#include "tessgrowth/spectral.hpp"

#include "tessgrowth/transition.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace tg {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }

void RationalPolynomial::trim() {
  while (c.size() > 1 && c.back() == 0) c.pop_back();
}

Rational RationalPolynomial::eval(const Rational& z) const {
  Rational r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * z + *it;
  return r;
}

std::complex<double> RationalPolynomial::eval(std::complex<double> z) const {
  std::complex<double> r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * z + to_double(*it);
  return r;
}

RationalPolynomial RationalPolynomial::monic() const {
  RationalPolynomial p(*this);
  if (p.c.empty() || p.c.back() == 0) return p;
  Rational lead = p.c.back();
  for (auto& x : p.c) x /= lead;
  return p;
}

std::string RationalPolynomial::str() const {
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& a = c[i];
    if (a == 0 && degree() > 0) continue;
    Rational mag = a < 0 ? Rational(-a) : a;
    if (out.empty()) {
      if (a < 0) out += "-";
    } else {
      out += a < 0 ? " - " : " + ";
    }
    std::string coef = to_string(mag);
    if (i == 0 || mag != 1) out += (coef.find('/') != std::string::npos && i > 0) ? "(" + coef + ")" : coef;
    if (i >= 1) out += "z";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& o) const {
  std::vector<Rational> r(c.size() + o.c.size() - 1);
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
  return RationalPolynomial(r);
}

RationalPolynomial RationalPolynomial::operator*(const Rational& s) const {
  RationalPolynomial p(*this);
  for (auto& x : p.c) x *= s;
  p.trim();
  return p;
}

RationalPolynomial poly_desc(std::initializer_list<Rational> highest_first) {
  std::vector<Rational> c(highest_first.begin(), highest_first.end());
  std::reverse(c.begin(), c.end());
  return RationalPolynomial(c);
}

const char* to_string(RateSource s) {
  switch (s) {
    case RateSource::Spectral: return "Spectral";
    case RateSource::ClosedForm: return "ClosedForm";
    case RateSource::EdgeHomogeneous: return "EdgeHomogeneous";
    default: return "SimulatorEstimate";
  }
}

RationalPolynomial char_poly(const RationalMatrix& m) {
  const int n = m.size();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RationalMatrix b = RationalMatrix::identity(n);  // B_1 = I
  for (int k = 1; k <= n; ++k) {
    RationalMatrix mb = m * b;
    c[n - k] = -mb.trace() / k;
    if (k < n) {
      b = mb;
      for (int i = 0; i < n; ++i) b(i, i) += c[n - k];
    }
  }
  return RationalPolynomial(c);
}

namespace {

using cld = std::complex<long double>;

cld eval_ld(const std::vector<long double>& a, cld z) {
  cld r = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) r = r * z + *it;
  return r;
}

RationalPolynomial derivative(const RationalPolynomial& p) {
  if (p.degree() < 1) return RationalPolynomial({Rational(0)});
  std::vector<Rational> d(p.c.size() - 1);
  for (size_t i = 1; i < p.c.size(); ++i) d[i - 1] = p.c[i] * Rational(static_cast<long long>(i));
  return RationalPolynomial(d);
}

bool is_zero(const RationalPolynomial& p) { return p.c.size() == 1 && p.c[0] == 0; }

RationalPolynomial poly_mod(RationalPolynomial a, const RationalPolynomial& b) {
  while (!is_zero(a) && a.degree() >= b.degree()) {
    Rational f = a.c.back() / b.c.back();
    int shift = a.degree() - b.degree();
    for (int i = 0; i <= b.degree(); ++i) a.c[i + shift] -= f * b.c[i];
    a.c.pop_back();
    if (a.c.empty()) a.c.push_back(0);
    a.trim();
  }
  return a;
}

RationalPolynomial poly_div(RationalPolynomial a, const RationalPolynomial& b) {
  if (a.degree() < b.degree()) return RationalPolynomial({Rational(0)});
  std::vector<Rational> q(a.degree() - b.degree() + 1);
  while (!is_zero(a) && a.degree() >= b.degree()) {
    Rational f = a.c.back() / b.c.back();
    int shift = a.degree() - b.degree();
    q[shift] = f;
    for (int i = 0; i <= b.degree(); ++i) a.c[i + shift] -= f * b.c[i];
    a.c.pop_back();
    if (a.c.empty()) a.c.push_back(0);
    a.trim();
  }
  return RationalPolynomial(q);
}

RationalPolynomial poly_gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!is_zero(b)) {
    RationalPolynomial r = poly_mod(a, b);
    a = b;
    b = r;
  }
  return a.monic();
}

// Exact bisection of a sign change of q on [lo, hi] down to the given width.
void refine(const RationalPolynomial& q, Rational& lo, Rational& hi, const Rational& width) {
  int slo = sign(q.eval(lo));
  for (int it = 0; it < 200 && hi - lo > width; ++it) {
    Rational mid = (lo + hi) / 2;
    int sm = sign(q.eval(mid));
    if (sm == 0) {
      lo = hi = mid;
      return;
    }
    if (sm == slo) lo = mid;
    else hi = mid;
  }
}

}  // namespace

RationalPolynomial squarefree(const RationalPolynomial& p) {
  RationalPolynomial g = poly_gcd(p, derivative(p));
  return poly_div(p, g).monic();
}

std::vector<std::complex<double>> roots(const RationalPolynomial& p) {
  RationalPolynomial q = p.monic();
  std::vector<std::complex<double>> out;
  // roots at zero
  size_t z0 = 0;
  while (z0 < q.c.size() - 1 && q.c[z0] == 0) ++z0;
  for (size_t i = 0; i < z0; ++i) out.push_back(0);
  std::vector<long double> a;
  for (size_t i = z0; i < q.c.size(); ++i) a.push_back(static_cast<long double>(to_double(q.c[i])));
  const int n = static_cast<int>(a.size()) - 1;
  if (n <= 0) return out;

  // Cauchy bound for the initial circle; Aberth-Ehrlich iteration.
  long double bound = 0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, std::fabs(a[i]));
  bound += 1;
  std::vector<long double> da(n);
  for (int i = 1; i <= n; ++i) da[i - 1] = a[i] * i;
  std::vector<cld> z(n);
  for (int i = 0; i < n; ++i) z[i] = std::polar(bound * 0.9L, 2 * M_PI * (i + 0.25L) / n);

  bool done = false;
  for (int it = 0; it < 2000 && !done; ++it) {
    done = true;
    for (int i = 0; i < n; ++i) {
      cld f = eval_ld(a, z[i]);
      cld fp = eval_ld(da, z[i]);
      if (std::abs(f) == 0) continue;
      cld ratio = f / fp;
      cld s = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) s += 1.0L / (z[i] - z[j]);
      cld w = ratio / (1.0L - ratio * s);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = ratio;
      z[i] -= w;
      if (std::abs(w) > 1e-16L * std::max(1.0L, std::abs(z[i]))) done = false;
    }
  }
  if (!done) {
    // Accept near-converged clusters (repeated roots converge slowly).
    for (int i = 0; i < n; ++i) {
      long double r = std::abs(eval_ld(a, z[i]));
      if (!(r < 1e-6L * std::pow(std::max(1.0L, std::abs(z[i])), n)))
        throw std::runtime_error("root iteration did not converge for " + p.str());
    }
  }
  for (auto& r : z) out.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
  return out;
}

GrowthRate max_modulus_root(const RationalPolynomial& p) {
  if (p.degree() < 1) throw std::invalid_argument("max_modulus_root needs degree >= 1");
  auto rs = roots(p);
  std::complex<double> best = rs[0];
  for (const auto& r : rs)
    if (std::abs(r) > std::abs(best) + 1e-12 ||
        (std::abs(std::abs(r) - std::abs(best)) <= 1e-12 && r.real() > best.real()))
      best = r;

  GrowthRate g;
  g.source = RateSource::Spectral;
  g.value = std::abs(best);
  const double tol = 1e-7 * std::max(1.0, std::abs(best));
  if (std::fabs(best.imag()) < tol && g.value > 0) {
    // Real dominant root: bracket it by exact sign changes of the squarefree part.
    RationalPolynomial q = squarefree(p);
    const double x = best.real();
    for (double d = 1e-9 * std::max(1.0, std::fabs(x)); d < 1e-3 * std::max(1.0, std::fabs(x)); d *= 10) {
      Rational lo = from_double(x - d), hi = from_double(x + d);
      int sl = sign(q.eval(lo)), sh = sign(q.eval(hi));
      if (sl == 0) {
        g.lo = g.hi = lo;
        g.certified = true;
        break;
      }
      if (sh == 0) {
        g.lo = g.hi = hi;
        g.certified = true;
        break;
      }
      if (sl != sh) {
        refine(q, lo, hi, Rational(1, 1'000'000'000'000LL));
        g.lo = lo;
        g.hi = hi;
        g.certified = true;
        break;
      }
    }
    if (g.certified) {
      if (x < 0) {
        Rational l = -g.hi, h = -g.lo;
        g.lo = l;
        g.hi = h;
      }
      g.value = to_double((g.lo + g.hi) / 2);
      return g;
    }
  }
  g.lo = from_double(g.value - 1e-10 * std::max(1.0, g.value));
  g.hi = from_double(g.value + 1e-10 * std::max(1.0, g.value));
  return g;
}

GrowthRate palindromic_quartic_root(const Rational& a, const Rational& b) {
  // Some families land on b <= 0 (or a = 0); the formula still holds as long as
  // w* = A/2 is real and at least 2, i.e. the dominant root is real.
  const double ad = to_double(a), bd = to_double(b);
  if (a < 0 || ad * ad + 4 * bd + 8 < 0) throw std::invalid_argument("palindromic quartic: no real dominant root");
  const double big_a = ad + std::sqrt(ad * ad + 4 * bd + 8);
  // Below A = 4 both w-roots lie in [-2, 2], so every root sits on the unit
  // circle; the formula turns complex with modulus |A + i*sqrt(16 - A^2)|/4 = 1.
  const double lambda = big_a < 4 ? 1.0 : 0.25 * (big_a + std::sqrt(big_a * big_a - 16));

  GrowthRate g;
  g.source = RateSource::ClosedForm;
  g.value = lambda;
  RationalPolynomial q = poly_desc({Rational(1), -a, -b, -a, Rational(1)});
  Rational lo = from_double(lambda - 1e-9 * lambda), hi = from_double(lambda + 1e-9 * lambda);
  if (sign(q.eval(lo)) != sign(q.eval(hi))) {
    refine(q, lo, hi, Rational(1, 1'000'000'000'000LL));
    g.certified = true;
  }
  g.lo = lo;
  g.hi = hi;
  return g;
}

double palindromic_quartic_printed(double a, double b) {
  const double w = a + std::sqrt(a * a + 4 * b + 8);
  return 0.25 * (w + std::sqrt(4 * b - 8 + a * w));
}

std::vector<Rational> corona_series(const RationalMatrix& m, const std::vector<Rational>& v1, int n,
                                    const std::vector<Rational>& weights) {
  std::vector<Rational> j = weights.empty() ? std::vector<Rational>(m.size(), Rational(1)) : weights;
  std::vector<Rational> out;
  std::vector<Rational> v = v1;
  for (int c = 1; c <= n; ++c) {
    Rational t = 0;
    for (int i = 0; i < m.size(); ++i) t += j[i] * v[i];
    out.push_back(t);
    if (c < n) v = m.apply(v);
  }
  return out;
}

std::vector<Rational> corona_series_ogf(const RationalMatrix& m, const std::vector<Rational>& v1, int n,
                                        const std::vector<Rational>& weights) {
  const int d = m.size();
  std::vector<Rational> j = weights.empty() ? std::vector<Rational>(d, Rational(1)) : weights;
  auto dot = [&](const std::vector<Rational>& v) {
    Rational t = 0;
    for (int i = 0; i < d; ++i) t += j[i] * v[i];
    return t;
  };
  // (zI - M)^{-1} = sum_k B_k z^{d-1-k} / chi(z), B_0 = I, B_k = M B_{k-1} + c_{d-k} I.
  RationalPolynomial chi = char_poly(m);
  // Q(z) = z^d chi(1/z): coefficient of z^i is c_{d-i}.
  std::vector<Rational> qz(d + 1), pz(d + 1);
  for (int i = 0; i <= d; ++i) qz[i] = chi.c[d - i];
  RationalMatrix b = RationalMatrix::identity(d);
  for (int k = 0; k < d; ++k) {
    pz[k + 1] = dot(b.apply(v1));
    b = m * b;
    for (int i = 0; i < d; ++i) b(i, i) += chi.c[d - k - 1];
  }
  // Power-series division P/Q (Q(0) = 1).
  std::vector<Rational> a(n + 1);
  for (int t = 0; t <= n; ++t) {
    Rational x = t <= d ? pz[t] : Rational(0);
    for (int i = 1; i <= std::min(t, d); ++i) x -= qz[i] * a[t - i];
    a[t] = x;
  }
  return std::vector<Rational>(a.begin() + 1, a.end());
}

double truncate_decimals(double x, int decimals) {
  const long double p = std::pow(10.0L, decimals);
  return static_cast<double>(std::floor(static_cast<long double>(x) * p) / p);
}

std::string truncated_string(double x, int decimals) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(decimals) << truncate_decimals(x, decimals);
  return os.str();
}

GrowthRate growth_rate(const CyclicSequence& s, const std::string& variant) {
  CatalogMatrix cm = catalog_matrix(s, variant);
  GrowthRate g = max_modulus_root(char_poly(cm.matrix.m));
  g.source = RateSource::Spectral;
  return g;
}

}  // namespace tg
