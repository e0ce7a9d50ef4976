#pragma once

#include "ahrg/lattice.hpp"
#include "ahrg/matrix.hpp"
#include "ahrg/torus.hpp"

#include <map>
#include <string>
#include <vector>

namespace ahrg {

/// Cartan type label ("B2", "A1xA1", "G2xT1") plus lattice choice.
/// lattice is "sc", "adjoint" or "explicit"; explicit rows are a basis of X
/// in fundamental-weight coordinates (torus coordinates appended).
struct CartanSpec {
  std::string type;
  std::string lattice = "sc";
  std::vector<IntVec> basis;
};

/// Based root datum with X = Z^rank. Roots live in X coordinates, coroots in
/// the dual Y coordinates, and the pairing is the dot product. Positive roots
/// come first (sorted by height), then negatives in the same order, so root
/// i and root i + npos() are opposite.
class RootDatum {
 public:
  static RootDatum build(const CartanSpec& spec);

  int rank() const { return rank_; }
  int semisimple_rank() const { return (int)simple_.size(); }
  int nroots() const { return (int)roots_.size(); }
  int npos() const { return (int)roots_.size() / 2; }

  const IntVec& root(int i) const { return roots_[i]; }
  const IntVec& coroot(int i) const { return coroots_[i]; }
  /// Coefficients of root i in the simple roots.
  const IntVec& root_coeffs(int i) const { return coeffs_[i]; }
  const std::vector<int>& simple() const { return simple_; }
  int simple_root(int k) const { return simple_[k]; }
  int negative_of(int i) const { return i < npos() ? i + npos() : i - npos(); }
  bool is_positive(int i) const { return i < npos(); }
  /// Index of a root given in X coordinates, or -1.
  int find_root(const IntVec& x) const;

  /// Root datum blocks: for each simple index, its irreducible component.
  const std::vector<int>& component_of_simple() const { return comp_; }
  const std::string& label() const { return label_; }
  const std::vector<std::string>& simple_names() const { return names_; }

  /// W_0-invariant form on X (x) Q with shortest roots of squared length 2.
  const RatMat& form_X() const { return gx_; }
  /// Dual form on Y (x) Q.
  const RatMat& form_Y() const { return gy_; }
  Rational norm2_Y(const RatVec& y) const;

  /// Whether alpha^vee lies in 2Y, i.e. 2 alpha belongs to the non-reduced system.
  bool coroot_in_2Y(int i) const;
  /// X-vectors of R_nr and R_1.
  std::vector<IntVec> nonreduced_roots() const;
  std::vector<IntVec> reduced_one() const;

  /// Reflection s_alpha as an integer matrix on X (columns are images of e_j).
  IntMat reflection_X(int i) const;
  /// Reflection s_alpha^vee on Y.
  IntMat reflection_Y(int i) const;

  bool is_semisimple() const { return semisimple_rank() == rank_; }
  /// Checks the root datum invariants; throws std::logic_error on failure.
  void validate() const;

 private:
  int rank_ = 0;
  std::string label_;
  std::vector<IntVec> roots_, coroots_, coeffs_;
  std::vector<int> simple_;
  std::vector<int> comp_;
  std::vector<std::string> names_;
  std::map<IntVec, int> index_;
  RatMat gx_, gy_;
};

/// Cartan matrix A_ij = <alpha_i, alpha_j^vee> of an irreducible type.
IntMat cartan_matrix(char family, int n);

/// Data attached to a subset P of simple roots (given as simple indices).
struct ParabolicData {
  std::vector<int> P;            // simple indices
  std::vector<int> roots;        // indices of R_P
  IntMat span_basis;             // saturated basis of X cap QP (columns)
  IntMat perp_basis;             // basis of X cap (P^vee)^perp (columns)
  IntMat upper_coords;           // M^{-1}: row block [|P| .. rank) gives X^P coordinates
  IntMat lower_coords;           // N^{-1}: row block [rank-|P| .. rank) gives X_P coordinates
  int upper_rank() const { return span_basis.rows - span_basis.cols; }

  /// Image of x in X^P = X / (X cap QP), in a fixed lattice basis.
  IntVec to_upper(const IntVec& x) const;
  /// Image of x in X_P = X / (X cap (P^vee)^perp).
  IntVec to_lower(const IntVec& x) const;
  /// Whether t is trivial on X cap QP (so t lies in T^P).
  bool in_upper_torus(const TorusPoint& t) const;
  /// Whether t is trivial on X cap (P^vee)^perp (so t lies in T_P).
  bool in_lower_torus(const TorusPoint& t) const;
};

ParabolicData parabolic_data(const RootDatum& d, const std::vector<int>& P);

/// A minimal parabolic subsystem R_Q properly containing R_P.
struct MinimalParabolic {
  std::vector<int> roots;     // indices of R_Q
  std::vector<int> basis;     // Q as root indices (contains P)
  int alpha_Q = -1;           // root index of the extra simple root
  /// For alpha in R_Q: restriction to a^P equals mult * alpha_Q^P.
  std::map<int, Rational> multiplicity;
};

std::vector<MinimalParabolic> minimal_parabolics_containing(const RootDatum& d, const ParabolicData& pd);

enum class DatumPosition { unitary, positive, general };
DatumPosition classify_position(const RootDatum& d, const std::vector<int>& P, const TorusPoint& t);
const char* to_string(DatumPosition p);

}  // namespace ahrg
