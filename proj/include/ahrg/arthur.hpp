#pragma once

#include "ahrg/elliptic.hpp"
#include "ahrg/rgroups.hpp"

#include <string>
#include <vector>

namespace ahrg {

/// User-supplied projective characters of r_xi: values[i][j] is the value of
/// row i on the j-th element of RGroupData::rgroup. Rows carry a cocycle label;
/// only rows with equal labels may be paired.
struct TwistedTable {
  std::vector<std::string> names;
  std::vector<std::string> cocycle;
  std::vector<std::vector<Cyclotomic>> values;
};

/// r_xi as an abstract group in the order of its arrow list.
FiniteGroup arrow_group(const Groupoid& G, const std::vector<Arrow>& arrows);
/// Linear parts of the arrows on a^P.
RealRep arrow_action(const Groupoid& G, const std::vector<Arrow>& arrows);

struct GramReport {
  std::string label;
  int rgroup_order = 0;
  FiniteGroup group;
  RealRep action;
  CharacterTable table;
  bool twisted = false;
  std::vector<std::string> row_names;
  std::vector<Cyclotomic> degrees;
  CycMat gram;
  int rank = 0;
  int elliptic_classes = 0;
  bool hermitian = false;
  bool psd = false;
  bool rank_matches = false;
  bool induced_vanishing = false;
  bool koszul_agrees = false;  // ordinary tables only
  bool experimental = false;   // non-tempered input
  bool ok() const {
    return hermitian && psd && induced_vanishing && (twisted || (rank_matches && koszul_agrees));
  }
};

/// |G|^{-1} sum_r det(1-r) conj(rho(r)) rho'(r) for element-wise values.
Cyclotomic ep_pair(const FiniteGroup& G, const RealRep& V, const std::vector<Cyclotomic>& rho,
                   const std::vector<Cyclotomic>& rho2);

GramReport arthur_gram(const Groupoid& G, const RGroupData& R, const TwistedTable* twisted = nullptr);
/// Gram times the degree vector vanishes.
bool induced_vanishing_check(const GramReport& g);
int ell_rank(const GramReport& g);

struct Q1Report {
  CycMat arthur;  // rows ordered as the arthur side's table
  CycMat oracle;  // permuted to the same row order
  bool rows_matched = false;
  bool equal = false;
  int rank = 0;
  GramReport gram;
};
/// q = 1 Arthur Gram on the principal series at a torsion point versus the
/// exterior-power Gram of the stabilizer W_t on X (x) Q.
Q1Report q1_isometry_check(const WeylGroup& W, const TorusPoint& t);

}  // namespace ahrg
