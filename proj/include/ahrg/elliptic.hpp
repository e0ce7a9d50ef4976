#pragma once

#include "ahrg/finite_group.hpp"

#include <string>
#include <vector>

namespace ahrg {

/// A rational representation: rho[g] is the matrix of element g.
struct RealRep {
  std::vector<RatMat> rho;
  int dim() const { return rho.empty() ? 0 : rho[0].rows; }
  static RealRep from_int(const std::vector<IntMat>& mats);
  bool is_homomorphism(const FiniteGroup& G) const;
};

/// A class function as values on classes.
using ClassFunction = std::vector<Cyclotomic>;

Rational det_one_minus(const RatMat& g);
/// tr Lambda^i(g) for i = 0..n as sums of principal minors.
std::vector<Rational> exterior_traces(const RatMat& g);

/// |G|^{-1} sum_g det(1-g)_V conj(rho(g)) rho'(g).
Cyclotomic elliptic_pairing_arthur(const FiniteGroup& G, const RealRep& V, const ClassFunction& rho,
                                   const ClassFunction& rho2);
/// sum_i (-1)^i dim Hom_G(rho (x) Lambda^i V, rho'); each dimension is checked
/// to be a nonnegative integer.
Cyclotomic elliptic_pairing_koszul(const FiniteGroup& G, const RealRep& V, const ClassFunction& rho,
                                   const ClassFunction& rho2);
int elliptic_class_count(const FiniteGroup& G, const RealRep& V);

/// Gram matrix of the Arthur form over the rows of T.
CycMat elliptic_gram(const FiniteGroup& G, const RealRep& V, const CharacterTable& T, bool koszul = false);

/// Exact rational copy of a Gram matrix whose entries are rational; throws otherwise.
RatMat rational_part(const CycMat& m);
bool is_hermitian(const CycMat& m);

struct CrossedProductReport {
  int group_order = 0, set_size = 0;
  bool action_ok = false;
  bool lands_in_invariants = false;
  bool multiplicative = false;
  bool left_inverse = false;   // L' o L = id on the basis delta_u (x) g
  bool right_inverse = false;  // L o L' = id on averaged basis tensors
  int invariant_dim = 0;
  bool ok() const { return action_ok && lands_in_invariants && multiplicative && left_inverse && right_inverse; }
};

/// act[g][u] = g u must be a left action of G on {0..|U|-1}.
CrossedProductReport crossed_product_iso_check(const FiniteGroup& G, const std::vector<std::vector<int>>& act);

struct MoritaReport {
  int sigma = -1;
  int multiplicity_dim = 0;
  ClassFunction character;  // of the multiplicity space
  int matches = -1;         // row of the character table it equals
  int expected = -1;        // row of sigma^*
  bool ok() const { return matches >= 0 && matches == expected; }
};

/// Multiplicity space Hom_G(sigma, C[G]) with G acting by right translation.
MoritaReport morita_induced_check(const FiniteGroup& G, const CharacterTable& T, int sigma);

}  // namespace ahrg
