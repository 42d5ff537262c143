#include "g2lyap/exact_matrix.hpp"

#include <stdexcept>

namespace g2lyap {

ExactMatrix::ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("ExactMatrix: negative shape");
  a_.assign(static_cast<std::size_t>(rows) * cols, Rational(0));
}

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_int_rows(const std::vector<std::vector<long>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r > 0 ? static_cast<int>(rows[0].size()) : 0;
  ExactMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("ExactMatrix: ragged rows");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<long>> v;
  for (const auto& r : rows) v.emplace_back(r);
  *this = from_int_rows(v);
}

int ExactMatrix::dim() const {
  if (!is_square()) throw std::logic_error("ExactMatrix: dim() on non-square matrix");
  return rows_;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("ExactMatrix: shape mismatch in +");
  ExactMatrix r(rows_, cols_);
  for (std::size_t t = 0; t < a_.size(); ++t) r.a_[t] = a_[t] + o.a_[t];
  return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("ExactMatrix: shape mismatch in -");
  ExactMatrix r(rows_, cols_);
  for (std::size_t t = 0; t < a_.size(); ++t) r.a_[t] = a_[t] - o.a_[t];
  return r;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix r(rows_, cols_);
  for (std::size_t t = 0; t < a_.size(); ++t) r.a_[t] = -a_[t];
  return r;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("ExactMatrix: shape mismatch in *");
  ExactMatrix r(rows_, o.cols_);
  Rational acc;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < o.cols_; ++j) {
      acc = 0;
      for (int k = 0; k < cols_; ++k) {
        if ((*this)(i, k) != 0 && o(k, j) != 0) acc += (*this)(i, k) * o(k, j);
      }
      r(i, j) = acc;
    }
  }
  return r;
}

ExactMatrix ExactMatrix::operator*(const Rational& s) const {
  ExactMatrix r(rows_, cols_);
  for (std::size_t t = 0; t < a_.size(); ++t) r.a_[t] = a_[t] * s;
  return r;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

bool ExactMatrix::is_identity() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool ExactMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Rational ExactMatrix::determinant() const {
  const int n = dim();
  ExactMatrix w = *this;
  Rational det(1);
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i) {
      if (w(i, k) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) return Rational(0);
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(w(k, j), w(piv, j));
      det = -det;
    }
    det *= w(k, k);
    for (int i = k + 1; i < n; ++i) {
      if (w(i, k) == 0) continue;
      const Rational f = w(i, k) / w(k, k);
      for (int j = k; j < n; ++j) w(i, j) -= f * w(k, j);
    }
  }
  return det;
}

ExactMatrix ExactMatrix::inverse() const {
  const int n = dim();
  ExactMatrix w = *this;
  ExactMatrix inv = identity(n);
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i) {
      if (w(i, k) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) throw std::domain_error("ExactMatrix: singular matrix has no inverse");
    if (piv != k) {
      for (int j = 0; j < n; ++j) {
        std::swap(w(k, j), w(piv, j));
        std::swap(inv(k, j), inv(piv, j));
      }
    }
    const Rational p = w(k, k);
    for (int j = 0; j < n; ++j) {
      w(k, j) /= p;
      inv(k, j) /= p;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k || w(i, k) == 0) continue;
      const Rational f = w(i, k);
      for (int j = 0; j < n; ++j) {
        w(i, j) -= f * w(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

}  // namespace g2lyap
