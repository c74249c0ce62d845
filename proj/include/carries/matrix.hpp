#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "carries/rational.hpp"

namespace carries {

/// Dense row-major matrix over an exact scalar type (Int or Rational).
template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(size_t rows, size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(size_t n) {
    Matrix m(n, n, T(0));
    for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch");
    Matrix out(a.rows_, b.cols_, T(0));
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        for (size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  /// Exact k-th power by repeated squaring; k = 0 gives the identity.
  Matrix pow(unsigned long k) const {
    if (rows_ != cols_) throw std::invalid_argument("Matrix: pow needs square");
    Matrix result = identity(rows_);
    Matrix base = *this;
    while (k > 0) {
      if (k & 1) result = result * base;
      base = base * base;
      k >>= 1;
    }
    return result;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  size_t rows_, cols_;
  std::vector<T> data_;
};

/// Exact determinant by Bareiss fraction-free elimination. Every division is
/// exact over the integers, so the same code serves Int and Rational.
template <typename T>
T determinant(Matrix<T> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
  const size_t n = m.rows();
  if (n == 0) return T(1);
  T prev_pivot(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == T(0)) {
      size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == T(0)) ++swap_row;
      if (swap_row == n) return T(0);
      for (size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev_pivot;
      }
      m(i, k) = T(0);
    }
    prev_pivot = m(k, k);
  }
  T det = m(n - 1, n - 1);
  return sign < 0 ? T(-det) : det;
}

/// Basis of the right nullspace of a rational matrix, via Gauss-Jordan
/// reduction. Each basis vector has length cols().
inline std::vector<std::vector<Rational>> nullspace(Matrix<Rational> m) {
  const size_t rows = m.rows(), cols = m.cols();
  std::vector<long> pivot_col_of_row(rows, -1);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    for (size_t j = 0; j < cols; ++j) std::swap(m(r, j), m(piv, j));
    const Rational inv = m(r, c).inverse();
    for (size_t j = 0; j < cols; ++j) m(r, j) *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational f = m(i, c);
      for (size_t j = 0; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivot_col_of_row[r] = static_cast<long>(c);
    ++r;
  }
  std::vector<bool> is_pivot_col(cols, false);
  for (size_t i = 0; i < r; ++i) is_pivot_col[pivot_col_of_row[i]] = true;
  std::vector<std::vector<Rational>> basis;
  for (size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot_col[free_col]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free_col] = Rational(1);
    for (size_t i = 0; i < r; ++i) {
      v[pivot_col_of_row[i]] = -m(i, free_col);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace carries
