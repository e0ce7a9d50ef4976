#pragma once

#include "ahrg/lattice.hpp"
#include "ahrg/qpower.hpp"

#include <string>

namespace ahrg {

/// Character of X given on the standard basis: t(e_i) = exp(2 pi i torsion_i) v^{exponent_i}.
/// Torsion entries are kept in [0, 1).
struct TorusPoint {
  RatVec torsion;
  RatVec exponent;

  TorusPoint() = default;
  explicit TorusPoint(int rank) : torsion(rank), exponent(rank) {}
  TorusPoint(RatVec tor, RatVec ex);

  int rank() const { return (int)torsion.size(); }
  PhaseMonomial eval(const IntVec& x) const;
  QPower value(const IntVec& x, const VMode& mode) const { return QPower::monomial(eval(x), mode); }

  TorusPoint operator*(const TorusPoint& o) const;
  TorusPoint inverse() const;
  /// Unitary part t|t|^{-1} and absolute value |t|.
  TorusPoint unitary_part() const { return TorusPoint(torsion, RatVec(rank())); }
  TorusPoint abs_part() const { return TorusPoint(RatVec(rank()), exponent); }
  bool is_unitary() const;
  bool is_identity() const;
  /// Point x -> t(M^{-1} x) for M acting on X; minv is the inverse matrix.
  TorusPoint transformed(const IntMat& minv) const;

  bool operator==(const TorusPoint& o) const { return torsion == o.torsion && exponent == o.exponent; }
  bool operator!=(const TorusPoint& o) const { return !(*this == o); }
  bool operator<(const TorusPoint& o) const {
    return torsion != o.torsion ? torsion < o.torsion : exponent < o.exponent;
  }
  std::string str() const;
};

}  // namespace ahrg
