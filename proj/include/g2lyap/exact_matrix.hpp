#pragma once

#include <initializer_list>
#include <vector>

#include "g2lyap/rational.hpp"

namespace g2lyap {

// Dense matrix over exact rationals. All arithmetic is exact; no rounding
// ever occurs. Rectangular shapes are allowed; the square-only operations
// (determinant, inverse, pow) throw on non-square input.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols);  // zero-filled

  static ExactMatrix identity(int n);
  static ExactMatrix from_int_rows(const std::vector<std::vector<long>>& rows);
  ExactMatrix(std::initializer_list<std::initializer_list<long>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  int dim() const;  // throws std::logic_error unless square

  const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  ExactMatrix transpose() const;
  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix operator-() const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator*(const Rational& s) const;
  bool operator==(const ExactMatrix& o) const;
  bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_identity() const;
  bool is_symmetric() const;

  Rational determinant() const;
  // Gauss-Jordan inverse; throws std::domain_error on singular input.
  ExactMatrix inverse() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> a_;  // row-major
};

}  // namespace g2lyap
