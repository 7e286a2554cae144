#include "tessgrowth/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace tg {

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  n_ = static_cast<int>(rows.size());
  a_.reserve(static_cast<size_t>(n_) * n_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n_) throw std::invalid_argument("matrix must be square");
    for (const auto& x : r) a_.push_back(x);
  }
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("size mismatch");
  RationalMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const Rational& x = (*this)(i, k);
      if (x == 0) continue;
      for (int j = 0; j < n_; ++j) r(i, j) += x * o(k, j);
    }
  return r;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
  RationalMatrix r(*this);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
  RationalMatrix r(*this);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

RationalMatrix RationalMatrix::scaled(const Rational& s) const {
  RationalMatrix r(*this);
  for (auto& x : r.a_) x *= s;
  return r;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("vector size mismatch");
  std::vector<Rational> out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if ((*this)(i, j) != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Rational RationalMatrix::trace() const {
  Rational t = 0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

Rational RationalMatrix::column_sum(int j) const {
  Rational s = 0;
  for (int i = 0; i < n_; ++i) s += (*this)(i, j);
  return s;
}

std::string RationalMatrix::grid() const {
  std::vector<std::string> cells(a_.size());
  size_t w = 1;
  for (size_t i = 0; i < a_.size(); ++i) {
    cells[i] = to_string(a_[i]);
    w = std::max(w, cells[i].size());
  }
  std::string out;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      const auto& c = cells[static_cast<size_t>(i) * n_ + j];
      out += std::string(w - c.size() + (j ? 1 : 0), ' ') + c;
    }
    out += "\n";
  }
  return out;
}

}  // namespace tg
