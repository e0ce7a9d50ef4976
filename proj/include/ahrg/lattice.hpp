#pragma once

#include "ahrg/rational.hpp"

#include <cstdint>
#include <vector>

namespace ahrg {

/// Dense integer matrix, row-major, with overflow-checked products.
struct IntMat {
  int rows = 0, cols = 0;
  std::vector<std::int64_t> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a((size_t)r * c, 0) {}
  static IntMat identity(int n);
  static IntMat from_rows(const std::vector<IntVec>& rs, int cols = -1);
  static IntMat from_cols(const std::vector<IntVec>& cs, int rows = -1);

  std::int64_t& operator()(int i, int j) { return a[(size_t)i * cols + j]; }
  std::int64_t operator()(int i, int j) const { return a[(size_t)i * cols + j]; }
  IntVec row(int i) const;
  IntVec col(int j) const;

  IntMat operator*(const IntMat& o) const;
  IntVec operator*(const IntVec& v) const;
  IntMat transpose() const;
  bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
  bool operator!=(const IntMat& o) const { return !(*this == o); }
  bool operator<(const IntMat& o) const { return a < o.a; }
  bool is_identity() const;
};

std::int64_t checked_add(std::int64_t x, std::int64_t y);
std::int64_t checked_mul(std::int64_t x, std::int64_t y);
std::int64_t dot(const IntVec& x, const IntVec& y);

/// U * A * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}.
struct SmithForm {
  IntMat U, V, D;
  std::vector<std::int64_t> diag;  // nonzero invariant factors, positive
  int rank() const { return (int)diag.size(); }
};
SmithForm smith_normal_form(const IntMat& A);

/// Inverse of a unimodular matrix.
IntMat unimodular_inverse(const IntMat& M);
/// Determinant via fraction-free elimination; exact.
BigInt determinant(const IntMat& M);

/// Basis (columns) of the integer kernel {x : A x = 0}.
IntMat integer_kernel(const IntMat& A);
/// Basis (columns) of the saturation (Q-span intersect Z^n) of the column span.
IntMat saturation(const IntMat& gens);
/// Unimodular matrix whose first k columns are the given saturated basis.
IntMat extend_to_unimodular(const IntMat& saturated);

/// Rational inverse of a square integer matrix; throws if singular.
std::vector<RatVec> rational_inverse(const IntMat& M);

/// Invariant factors > 1 of the cokernel Z^rows / (column span of gens) on
/// its torsion part, together with the free rank.
struct QuotientShape {
  std::vector<std::int64_t> torsion;
  int free_rank = 0;
};
QuotientShape quotient_shape(const IntMat& gens);

}  // namespace ahrg
