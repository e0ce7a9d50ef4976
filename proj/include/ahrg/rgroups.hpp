#pragma once

#include "ahrg/hecke.hpp"
#include "ahrg/ratfun.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ahrg {

/// A triple (P, delta, t) with t in T^P.
struct InductionDatum {
  std::vector<int> P;
  SpectralDatum delta;
  TorusPoint t;
};

/// Rank one c-function c_alpha evaluated at a point with t(alpha) = ra * z^m.
RatFun c_alpha(const Parameters& q, int alpha, const PhaseMonomial& ra, long m);

/// c_Q^P(r t) as a function of the coordinate z = t(gamma_Q), gamma_Q the
/// primitive vector of X^P along alpha_Q^P.
struct CosetFunction {
  MinimalParabolic Q;
  IntVec gamma;     // primitive, in X^P coordinates
  RatFun c;         // after cancellation
  /// Unitary points where some denominator factor vanishes but no pole survives.
  std::vector<PhaseMonomial> cancelled;
};

CosetFunction cQP_on_coset(const WeylGroup& W, const Parameters& q, const ParabolicData& pd,
                           const SpectralDatum& delta, const MinimalParabolic& Q);

/// The coset {t in T^P_un : t(gamma) = z0} of T^Q_un.
struct Mirror {
  int q_index = -1;  // position in minimal_parabolics_containing
  int alpha_Q = -1;  // root index
  IntVec gamma;
  PhaseMonomial z0;
  long order = 0;
  bool contains(const ParabolicData& pd, const TorusPoint& t) const;
};

struct MirrorSet {
  std::vector<Mirror> mirrors;
  std::vector<CosetFunction> functions;
  /// Human-readable notes on totally cancelled denominator zeros.
  std::vector<std::string> flags;
};

MirrorSet mirrors(const WeylGroup& W, const Parameters& q, const ParabolicData& pd, const SpectralDatum& delta);

/// Lift of an X^P vector to X.
IntVec lift_upper(const ParabolicData& pd, const IntVec& u);

/// The unique delta-invariant arrow acting as the reflection in M. Throws
/// std::runtime_error when there is no candidate or more than one.
Arrow reflection_for_mirror(const Groupoid& G, const SpectralDatum& delta, const Mirror& M);

struct RGroupData {
  InductionDatum xi;
  bool nontempered = false;
  std::vector<Arrow> stabilizer;    // W_xi
  std::vector<Mirror> mirrors_xi;   // M_xi
  std::vector<IntVec> roots_pos;    // R_xi^+ in X^P coordinates
  std::vector<Arrow> reflections;   // s_M, parallel to mirrors_xi
  std::vector<Arrow> weyl_R;        // W(R_xi)
  std::vector<Arrow> rgroup;        // r_xi
  /// factor[i] = (index into rgroup, index into weyl_R) with stabilizer[i] = r o u.
  std::vector<std::pair<int, int>> factor;
  bool unique_factorization = false;
  bool normal = false;
  bool root_system = false;
  bool simply_transitive = false;
  bool transitivity_checked = false;
  /// Non-tempered only: the component rule and the complexification rule agree.
  bool mirror_rules_agree = true;
  std::vector<std::string> flags;
  bool ok() const { return unique_factorization && normal && root_system && simply_transitive && mirror_rules_agree; }
};

RGroupData rgroup(const Groupoid& G, const Parameters& q, const InductionDatum& xi);
RGroupData rgroup_nontempered(const Groupoid& G, const Parameters& q, const InductionDatum& xi);

/// Linear part of an arrow on X^P as a rational matrix.
RatMat arrow_linear_part(const Groupoid& G, const Arrow& a);

}  // namespace ahrg
