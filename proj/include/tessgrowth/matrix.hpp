// Small dense matrices over the rationals.
#pragma once

#include "tessgrowth/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace tg {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(int n);

  int size() const { return n_; }
  Rational& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  RationalMatrix operator*(const RationalMatrix& o) const;
  RationalMatrix operator+(const RationalMatrix& o) const;
  RationalMatrix operator-(const RationalMatrix& o) const;
  RationalMatrix scaled(const Rational& s) const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;
  RationalMatrix transposed() const;
  Rational trace() const;
  Rational column_sum(int j) const;

  bool operator==(const RationalMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }
  bool operator!=(const RationalMatrix& o) const { return !(*this == o); }

  // Aligned text grid, one row per line.
  std::string grid() const;

 private:
  int n_ = 0;
  std::vector<Rational> a_;
};

}  // namespace tg
