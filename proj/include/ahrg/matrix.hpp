#pragma once

#include "ahrg/cyclotomic.hpp"

#include <stdexcept>
#include <vector>

namespace ahrg {

namespace detail {
inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }
inline Rational inv(const Rational& x) { return 1 / x; }
inline Cyclotomic inv(const Cyclotomic& x) { return x.inverse(); }
}  // namespace detail

/// Dense matrix over an exact field (Rational or Cyclotomic).
template <class K>
struct Matrix {
  int rows = 0, cols = 0;
  std::vector<K> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a((size_t)r * c, K(0)) {}
  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  K& operator()(int i, int j) { return a[(size_t)i * cols + j]; }
  const K& operator()(int i, int j) const { return a[(size_t)i * cols + j]; }

  Matrix operator*(const Matrix& o) const {
    if (cols != o.rows) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        const K& x = (*this)(i, k);
        if (detail::is_zero(x)) continue;
        for (int j = 0; j < o.cols; ++j)
          if (!detail::is_zero(o(k, j))) r(i, j) += x * o(k, j);
      }
    return r;
  }
  Matrix operator+(const Matrix& o) const {
    Matrix r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    Matrix r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
    return r;
  }
  Matrix scaled(const K& s) const {
    Matrix r = *this;
    for (auto& x : r.a) x *= s;
    return r;
  }
  bool operator==(const Matrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const {
    for (const auto& x : a)
      if (!detail::is_zero(x)) return false;
    return true;
  }

  /// Reduced row echelon form in place; returns pivot columns.
  std::vector<int> rref() {
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
      int p = -1;
      for (int i = r; i < rows; ++i)
        if (!detail::is_zero((*this)(i, c))) { p = i; break; }
      if (p < 0) continue;
      if (p != r)
        for (int j = 0; j < cols; ++j) std::swap((*this)(p, j), (*this)(r, j));
      K iv = detail::inv((*this)(r, c));
      for (int j = c; j < cols; ++j) (*this)(r, j) *= iv;
      for (int i = 0; i < rows; ++i) {
        if (i == r || detail::is_zero((*this)(i, c))) continue;
        K f = (*this)(i, c);
        for (int j = c; j < cols; ++j)
          if (!detail::is_zero((*this)(r, j))) (*this)(i, j) -= f * (*this)(r, j);
      }
      piv.push_back(c);
      ++r;
    }
    return piv;
  }

  int rank() const {
    Matrix m = *this;
    return (int)m.rref().size();
  }

  /// Basis of {x : M x = 0} as columns.
  Matrix nullspace() const {
    Matrix m = *this;
    auto piv = m.rref();
    std::vector<bool> is_piv(cols, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<int> freec;
    for (int c = 0; c < cols; ++c)
      if (!is_piv[c]) freec.push_back(c);
    Matrix n(cols, (int)freec.size());
    for (size_t k = 0; k < freec.size(); ++k) {
      n(freec[k], (int)k) = K(1);
      for (size_t r = 0; r < piv.size(); ++r) n(piv[r], (int)k) = -m((int)r, freec[k]);
    }
    return n;
  }

  K det() const {
    if (rows != cols) throw std::invalid_argument("determinant of non-square matrix");
    Matrix m = *this;
    K d(1);
    for (int c = 0; c < cols; ++c) {
      int p = -1;
      for (int i = c; i < rows; ++i)
        if (!detail::is_zero(m(i, c))) { p = i; break; }
      if (p < 0) return K(0);
      if (p != c) {
        for (int j = 0; j < cols; ++j) std::swap(m(p, j), m(c, j));
        d = -d;
      }
      d *= m(c, c);
      K iv = detail::inv(m(c, c));
      for (int i = c + 1; i < rows; ++i) {
        if (detail::is_zero(m(i, c))) continue;
        K f = m(i, c) * iv;
        for (int j = c; j < cols; ++j) m(i, j) -= f * m(c, j);
      }
    }
    return d;
  }

  Matrix inverse() const {
    if (rows != cols) throw std::invalid_argument("inverse of non-square matrix");
    Matrix m(rows, 2 * cols);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) m(i, j) = (*this)(i, j);
      m(i, cols + i) = K(1);
    }
    auto piv = m.rref();
    if ((int)piv.size() < rows || piv.back() >= cols) throw std::domain_error("singular matrix");
    Matrix r(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) r(i, j) = m(i, cols + j);
    return r;
  }
};

using RatMat = Matrix<Rational>;
using CycMat = Matrix<Cyclotomic>;

/// Exact positive semidefiniteness of a symmetric rational matrix.
bool is_psd(const RatMat& m);

}  // namespace ahrg
