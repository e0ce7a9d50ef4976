#include "ahrg/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace ahrg {

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("integer overflow in lattice arithmetic");
  return r;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("integer overflow in lattice arithmetic");
  return r;
}

std::int64_t dot(const IntVec& x, const IntVec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("dot: size mismatch");
  std::int64_t s = 0;
  for (size_t i = 0; i < x.size(); ++i) s = checked_add(s, checked_mul(x[i], y[i]));
  return s;
}

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rs, int c) {
  if (c < 0) c = rs.empty() ? 0 : (int)rs[0].size();
  IntMat m((int)rs.size(), c);
  for (int i = 0; i < m.rows; ++i) {
    if ((int)rs[i].size() != c) throw std::invalid_argument("ragged rows");
    for (int j = 0; j < c; ++j) m(i, j) = rs[i][j];
  }
  return m;
}

IntMat IntMat::from_cols(const std::vector<IntVec>& cs, int r) {
  if (r < 0) r = cs.empty() ? 0 : (int)cs[0].size();
  IntMat m(r, (int)cs.size());
  for (int j = 0; j < m.cols; ++j) {
    if ((int)cs[j].size() != r) throw std::invalid_argument("ragged columns");
    for (int i = 0; i < r; ++i) m(i, j) = cs[j][i];
  }
  return m;
}

IntVec IntMat::row(int i) const { return IntVec(a.begin() + (size_t)i * cols, a.begin() + (size_t)(i + 1) * cols); }

IntVec IntMat::col(int j) const {
  IntVec v(rows);
  for (int i = 0; i < rows; ++i) v[i] = (*this)(i, j);
  return v;
}

IntMat IntMat::operator*(const IntMat& o) const {
  if (cols != o.rows) throw std::invalid_argument("matrix product: shape mismatch");
  IntMat r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      std::int64_t x = (*this)(i, k);
      if (!x) continue;
      for (int j = 0; j < o.cols; ++j) r(i, j) = checked_add(r(i, j), checked_mul(x, o(k, j)));
    }
  return r;
}

IntVec IntMat::operator*(const IntVec& v) const {
  if ((int)v.size() != cols) throw std::invalid_argument("matrix-vector: shape mismatch");
  IntVec r(rows, 0);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r[i] = checked_add(r[i], checked_mul((*this)(i, j), v[j]));
  return r;
}

IntMat IntMat::transpose() const {
  IntMat r(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r(j, i) = (*this)(i, j);
  return r;
}

bool IntMat::is_identity() const {
  if (rows != cols) return false;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

namespace {

void row_axpy(IntMat& M, int dst, int src, std::int64_t q) {  // row dst -= q * row src
  if (!q) return;
  for (int j = 0; j < M.cols; ++j) M(dst, j) = checked_add(M(dst, j), -checked_mul(q, M(src, j)));
}
void col_axpy(IntMat& M, int dst, int src, std::int64_t q) {  // col dst -= q * col src
  if (!q) return;
  for (int i = 0; i < M.rows; ++i) M(i, dst) = checked_add(M(i, dst), -checked_mul(q, M(i, src)));
}
void swap_rows(IntMat& M, int i, int k) {
  if (i == k) return;
  for (int j = 0; j < M.cols; ++j) std::swap(M(i, j), M(k, j));
}
void swap_cols(IntMat& M, int j, int k) {
  if (j == k) return;
  for (int i = 0; i < M.rows; ++i) std::swap(M(i, j), M(i, k));
}

}  // namespace

SmithForm smith_normal_form(const IntMat& A) {
  const int m = A.rows, n = A.cols;
  IntMat D = A, U = IntMat::identity(m), V = IntMat::identity(n);
  int t = 0;
  while (t < std::min(m, n)) {
    int pi = -1, pj = -1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j)
        if (D(i, j) && (pi < 0 || std::llabs(D(i, j)) < std::llabs(D(pi, pj)))) pi = i, pj = j;
    if (pi < 0) break;
    swap_rows(D, t, pi), swap_rows(U, t, pi);
    swap_cols(D, t, pj), swap_cols(V, t, pj);
    for (;;) {
      bool clean = true;
      for (int i = t + 1; i < m; ++i) {
        std::int64_t q = D(i, t) / D(t, t);
        row_axpy(D, i, t, q), row_axpy(U, i, t, q);
        if (D(i, t)) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        std::int64_t q = D(t, j) / D(t, t);
        col_axpy(D, j, t, q), col_axpy(V, j, t, q);
        if (D(t, j)) clean = false;
      }
      if (!clean) {
        // Move the smallest remainder in row/column t into the pivot.
        int bi = t, bj = t;
        for (int i = t + 1; i < m; ++i)
          if (D(i, t) && std::llabs(D(i, t)) < std::llabs(D(bi, bj))) bi = i, bj = t;
        for (int j = t + 1; j < n; ++j)
          if (D(t, j) && std::llabs(D(t, j)) < std::llabs(D(bi, bj))) bi = t, bj = j;
        swap_rows(D, t, bi), swap_rows(U, t, bi);
        swap_cols(D, t, bj), swap_cols(V, t, bj);
        continue;
      }
      int bad = -1;
      for (int i = t + 1; i < m && bad < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t)) { bad = i; break; }
      if (bad < 0) break;
      row_axpy(D, t, bad, -1), row_axpy(U, t, bad, -1);
    }
    if (D(t, t) < 0) {
      for (int j = 0; j < n; ++j) D(t, j) = -D(t, j);
      for (int j = 0; j < m; ++j) U(t, j) = -U(t, j);
    }
    ++t;
  }
  SmithForm s{U, V, D, {}};
  for (int i = 0; i < std::min(m, n); ++i)
    if (D(i, i)) s.diag.push_back(D(i, i));
  return s;
}

std::vector<RatVec> rational_inverse(const IntMat& M) {
  if (M.rows != M.cols) throw std::invalid_argument("inverse of non-square matrix");
  const int n = M.rows;
  std::vector<RatVec> a(n, RatVec(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = M(i, j);
    a[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (a[r][c] != 0) { p = r; break; }
    if (p < 0) throw std::domain_error("singular matrix");
    std::swap(a[p], a[c]);
    Rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (int k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<RatVec> out(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

IntMat unimodular_inverse(const IntMat& M) {
  auto inv = rational_inverse(M);
  IntMat r(M.rows, M.cols);
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j) {
      if (!is_integer(inv[i][j])) throw std::domain_error("matrix is not unimodular");
      r(i, j) = inv[i][j].get_num().get_si();
    }
  return r;
}

BigInt determinant(const IntMat& M) {
  if (M.rows != M.cols) throw std::invalid_argument("determinant of non-square matrix");
  const int n = M.rows;
  std::vector<RatVec> a(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = M(i, j);
  Rational det = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (a[r][c] != 0) { p = r; break; }
    if (p < 0) return 0;
    if (p != c) std::swap(a[p], a[c]), det = -det;
    det *= a[c][c];
    for (int r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      Rational f = a[r][c] / a[c][c];
      for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det.get_num();
}

IntMat integer_kernel(const IntMat& A) {
  SmithForm s = smith_normal_form(A);
  const int r = s.rank();
  IntMat K(A.cols, A.cols - r);
  for (int j = r; j < A.cols; ++j)
    for (int i = 0; i < A.cols; ++i) K(i, j - r) = s.V(i, j);
  return K;
}

IntMat saturation(const IntMat& gens) {
  SmithForm s = smith_normal_form(gens);
  IntMat Ui = unimodular_inverse(s.U);
  const int r = s.rank();
  IntMat B(gens.rows, r);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < gens.rows; ++i) B(i, j) = Ui(i, j);
  return B;
}

IntMat extend_to_unimodular(const IntMat& S) {
  SmithForm s = smith_normal_form(S);
  if (s.rank() != S.cols) throw std::invalid_argument("extend_to_unimodular: columns not independent");
  for (auto d : s.diag)
    if (d != 1) throw std::invalid_argument("extend_to_unimodular: basis not saturated");
  IntMat Ui = unimodular_inverse(s.U);
  IntMat M(S.rows, S.rows);
  for (int i = 0; i < S.rows; ++i) {
    for (int j = 0; j < S.cols; ++j) M(i, j) = S(i, j);
    for (int j = S.cols; j < S.rows; ++j) M(i, j) = Ui(i, j);
  }
  return M;
}

QuotientShape quotient_shape(const IntMat& gens) {
  SmithForm s = smith_normal_form(gens);
  QuotientShape q;
  for (auto d : s.diag)
    if (d > 1) q.torsion.push_back(d);
  q.free_rank = gens.rows - s.rank();
  return q;
}

}  // namespace ahrg
