#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pfaff/exactmath/ratfunc.hpp"

namespace pfaff {

/// Dense row-major matrix over an exact field (Rational or RationalFunction).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
    return r;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b);
    Matrix r = a;
    for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
      }
    return r;
  }

  [[nodiscard]] Matrix scaled(const T& k) const {
    Matrix r = *this;
    for (auto& x : r.data_) x *= k;
    return r;
  }

  [[nodiscard]] Matrix transposed() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  static void check_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b - b * a;
}

/// Reduced row echelon form in place. Pivots are taken in the leftmost
/// available column, from the first row holding a nonzero entry there.
/// Only the first `pivot_cols` columns are eligible as pivots.
/// Returns the pivot column of each leading row.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& m, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    const T inv = T(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j)
      if (!m(row, j).is_zero()) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const T f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
std::vector<std::size_t> rref(Matrix<T>& m) {
  return rref(m, m.cols());
}

template <class T>
std::size_t rank(Matrix<T> m) {
  return rref(m).size();
}

/// Result of solving A X = B.
template <class T>
struct LinearSolution {
  bool consistent = false;
  /// Particular solution with all free unknowns set to zero (n x k).
  Matrix<T> x;
  /// unique[j] is true when unknown j takes the same value in every solution.
  std::vector<bool> unique;
  std::size_t kernel_dim = 0;
  std::vector<std::size_t> pivots;
};

/// Solves A X = B by RREF of the augmented matrix [A | B].
template <class T>
LinearSolution<T> try_solve_linear(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::InvalidArgument, "linear system row mismatch");
  const std::size_t n = a.cols();
  const std::size_t k = b.cols();
  Matrix<T> aug(a.rows(), n + k);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < k; ++j) aug(i, n + j) = b(i, j);
  }
  LinearSolution<T> sol;
  sol.pivots = rref(aug, n);
  const std::size_t r = sol.pivots.size();
  sol.consistent = true;
  for (std::size_t i = r; i < aug.rows(); ++i)
    for (std::size_t j = n; j < n + k; ++j)
      if (!aug(i, j).is_zero()) sol.consistent = false;
  sol.kernel_dim = n - r;
  sol.x = Matrix<T>(n, k);
  sol.unique.assign(n, false);
  std::vector<bool> is_pivot(n, false);
  for (auto p : sol.pivots) is_pivot[p] = true;
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t p = sol.pivots[i];
    for (std::size_t j = 0; j < k; ++j) sol.x(p, j) = aug(i, n + j);
    bool free_coupled = false;
    for (std::size_t c = 0; c < n; ++c)
      if (!is_pivot[c] && !aug(i, c).is_zero()) free_coupled = true;
    sol.unique[p] = !free_coupled;
  }
  return sol;
}

/// Throws InconsistentSystem when A X = B has no solution.
template <class T>
LinearSolution<T> solve_linear(const Matrix<T>& a, const Matrix<T>& b) {
  auto sol = try_solve_linear(a, b);
  if (!sol.consistent) throw Error(ErrorCode::InconsistentSystem, "linear system has no solution");
  return sol;
}

template <class T>
T determinant(Matrix<T> m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "determinant of non-square matrix");
  T det(1);
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && m(sel, col).is_zero()) ++sel;
    if (sel == n) return T(0);
    if (sel != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(sel, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    const T inv = T(1) / m(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m(i, col).is_zero()) continue;
      const T f = m(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return det;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::InvalidArgument, "inverse of non-square matrix");
  auto sol = try_solve_linear(m, Matrix<T>::identity(m.rows()));
  if (!sol.consistent || sol.kernel_dim != 0) throw Error(ErrorCode::ZeroDenominator, "singular matrix");
  return sol.x;
}

/// Polynomial determinant by cofactor expansion along the first row.
inline Poly laplace_determinant(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Poly(1);
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Poly det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Poly>> minor(n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) minor[i - 1].push_back(m[i][j]);
    const Poly sub = laplace_determinant(minor) * m[0][c];
    if (c % 2 == 0)
      det += sub;
    else
      det -= sub;
  }
  return det;
}

}  // namespace pfaff
