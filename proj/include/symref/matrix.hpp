#ifndef SYMREF_MATRIX_HPP
#define SYMREF_MATRIX_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "symref/errors.hpp"
#include "symref/exact.hpp"

namespace symref {

/*
 * Dense row-major matrix over an exact field (Rational or GaussianRational).
 *
 * All elimination routines pivot on the first nonzero entry of the current
 * column, scanning rows top to bottom. Echelon forms and kernel bases are
 * therefore canonical functions of the input, which keeps every report
 * reproducible.
 */
template <typename T>
class Matrix {
 public:
  using Scalar = T;
  using Vector = std::vector<T>;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) throw ContractViolation("matrix entry count does not match shape");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw ContractViolation("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<T>& entries() const { return data_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return symref::is_zero(x); });
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix operator-() const {
    Matrix m(*this);
    for (auto& x : m.data_) x = -x;
    return m;
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ContractViolation("matrix product: inner dimensions differ");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(r, k);
        if (symref::is_zero(x)) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) {
          if (!symref::is_zero(b(k, c))) p(r, c) += x * b(k, c);
        }
      }
    }
    return p;
  }

  friend Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw ContractViolation("matrix-vector product: dimension mismatch");
    Vector out(a.rows_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t c = 0; c < a.cols_; ++c)
        if (!symref::is_zero(a(r, c)) && !symref::is_zero(v[c])) out[r] += a(r, c) * v[c];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ContractViolation("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using MatrixQ = Matrix<Rational>;
using MatrixGQ = Matrix<GaussianRational>;

/// Shape first, then entries lexicographically under canonical_compare.
template <typename T>
std::strong_ordering canonical_compare(const Matrix<T>& a, const Matrix<T>& b) {
  if (auto c = a.rows() <=> b.rows(); c != 0) return c;
  if (auto c = a.cols() <=> b.cols(); c != 0) return c;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    if (auto c = canonical_compare(a.entries()[k], b.entries()[k]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

struct CanonicalLess {
  template <typename T>
  bool operator()(const T& a, const T& b) const {
    return canonical_compare(a, b) < 0;
  }
};

template <typename T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (is_zero(a(i, j))) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

/// Reduced row echelon form. Pivots are recorded in column order.
template <typename T>
struct EchelonForm {
  Matrix<T> reduced;
  std::vector<std::size_t> pivot_columns;
};

template <typename T>
EchelonForm<T> reduced_row_echelon(Matrix<T> m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    const T inv = T(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const T factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!is_zero(m(row, c))) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <typename T>
std::size_t rank(const Matrix<T>& m) {
  return reduced_row_echelon(m).pivot_columns.size();
}

/*
 * Basis of the right null space. One vector per free column f, in increasing
 * order of f: entry f is 1, the other free entries are 0, and pivot entries
 * are read off the reduced echelon form.
 */
template <typename T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& m) {
  const auto ech = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivot_columns) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(m.cols());
    v[f] = T(1);
    for (std::size_t r = 0; r < ech.pivot_columns.size(); ++r) v[ech.pivot_columns[r]] = -ech.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Bareiss fraction-free elimination.
template <typename T>
T determinant(Matrix<T> m) {
  if (!m.is_square()) throw ContractViolation("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  T previous(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && is_zero(m(swap_row, k))) ++swap_row;
      if (swap_row == n) return T(0);
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap_row, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T value = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / previous;
        m(i, j) = std::move(value);
      }
    }
    previous = m(k, k);
  }
  T det = m(n - 1, n - 1);
  return negate ? -det : det;
}

/// Gauss-Jordan inverse. Throws ContractViolation on singular input.
template <typename T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (!m.is_square()) throw ContractViolation("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = T(1);
  }
  auto ech = reduced_row_echelon(std::move(aug));
  if (ech.pivot_columns.size() < n || ech.pivot_columns[n - 1] != n - 1)
    throw ContractViolation("inverse of a singular matrix");
  Matrix<T> inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = ech.reduced(r, n + c);
  return inv;
}

/// Bilinear pairing u^T M v.
template <typename T>
T bilinear(const std::vector<T>& u, const Matrix<T>& m, const std::vector<T>& v) {
  T acc(0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (is_zero(u[r])) continue;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!is_zero(m(r, c)) && !is_zero(v[c])) acc += u[r] * m(r, c) * v[c];
  }
  return acc;
}

std::string to_string(const MatrixGQ& m);

}  // namespace symref

#endif  // SYMREF_MATRIX_HPP
