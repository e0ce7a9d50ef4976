#pragma once

#include "ahrg/weyl.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ahrg {

/// W_0-invariant parameters given as v-exponents: q_{alpha^vee} = v^{full},
/// q_{alpha^vee/2} = v^{half} (half only when alpha^vee lies in 2Y).
class Parameters {
 public:
  /// Per-simple-root exponents; missing entries take the defaults.
  Parameters(const RootDatum& d, const VMode& mode, const std::map<int, Rational>& full,
             const std::map<int, Rational>& half, const Rational& default_full = 2,
             const Rational& default_half = 0);
  static Parameters equal(const RootDatum& d, const VMode& mode, const Rational& full = 2) {
    return Parameters(d, mode, {}, {}, full, 0);
  }

  const VMode& mode() const { return mode_; }
  const Rational& full_exp(int root) const { return full_[root]; }
  const Rational& half_exp(int root) const { return half_[root]; }
  /// v-exponent of q(s_alpha) and of q(t_alpha s_alpha).
  Rational qs_exp(int root) const { return full_[root] + half_[root]; }
  Rational qs_prime_exp(int root) const { return full_[root]; }
  /// q^{1/2} - q^{-1/2} for q = v^e.
  QPower sqrt_difference(const Rational& e) const;
  QPower v(const Rational& e) const { return QPower::vpow(e, mode_); }
  bool all_trivial() const;
  /// Orbit index of each root under W_0.
  const std::vector<int>& orbit() const { return orbit_; }

 private:
  VMode mode_;
  std::vector<Rational> full_, half_;
  std::vector<int> orbit_;
};

using Theta = IntVec;
/// Sum of c * theta_x * N_w, keyed by (x, w).
using HeckeElement = std::map<std::pair<Theta, int>, QPower>;
/// Sum of c * N_w * theta_x, keyed by (w, x).
using NThetaElement = std::map<std::pair<int, Theta>, QPower>;

HeckeElement hecke_theta(const Theta& x);
HeckeElement hecke_N(int w, int rank);
HeckeElement hecke_add(const HeckeElement& a, const HeckeElement& b);
HeckeElement hecke_scale(const HeckeElement& a, const QPower& c);
bool hecke_equal(const HeckeElement& a, const HeckeElement& b);

/// Affine Hecke algebra in the Bernstein presentation. Caches are not
/// synchronized; use one instance per thread.
class HeckeAlgebra {
 public:
  HeckeAlgebra(const WeylGroup& W, const Parameters& q) : W_(&W), q_(q) {}

  const WeylGroup& weyl() const { return *W_; }
  const RootDatum& datum() const { return W_->datum(); }
  const Parameters& params() const { return q_; }
  const VMode& mode() const { return q_.mode(); }

  /// theta_x N_s - N_s theta_{s x} as an element of A, s the k-th simple reflection.
  const std::map<Theta, QPower>& cross_term(int k, const Theta& x) const;
  /// theta_x N_w rewritten as sum N_u theta_y.
  const NThetaElement& theta_times_N(const Theta& x, int w) const;
  /// N_w theta_y rewritten as sum theta_x N_u.
  const HeckeElement& N_times_theta(int w, const Theta& y) const;
  /// Finite Hecke algebra product N_a N_b as sum c_u N_u.
  const std::map<int, QPower>& finite_product(int a, int b) const;

  HeckeElement multiply(const HeckeElement& a, const HeckeElement& b) const;

 private:
  const WeylGroup* W_;
  Parameters q_;
  mutable std::map<std::pair<int, Theta>, std::map<Theta, QPower>> cross_;
  mutable std::map<std::pair<Theta, int>, NThetaElement> tn_;
  mutable std::map<std::pair<int, Theta>, HeckeElement> nt_;
  mutable std::map<std::pair<int, int>, std::map<int, QPower>> fin_;
};

/// Discrete series stand-in for H_P: central character and optional
/// one-dimensional realization.
struct SpectralDatum {
  std::vector<int> P;
  std::string name;
  TorusPoint r;  // character of X trivial on X cap (P^vee)^perp
  bool discrete = false;
  /// Scalars of N_s for s in P (indexed by simple index); empty if unrealized.
  std::map<int, QPower> eps;
  bool realized() const { return !P.empty() ? !eps.empty() : true; }
  /// Explicit stabilizer arrows (w, k-index) when not realized.
  std::vector<Arrow> declared_stabilizer;
};

/// All one-dimensional representations of H_P: sign types and the torsion
/// extensions of their central characters.
std::vector<SpectralDatum> one_dim_reps(const HeckeAlgebra& H, const ParabolicData& pd);
/// Squared norm of log|r| under the form on Y (v-exponent units).
Rational cc_norm(const RootDatum& d, const SpectralDatum& sd);
/// Whether delta twisted by the arrow is isomorphic to delta.
bool delta_invariant(const Groupoid& G, const SpectralDatum& sd, const Arrow& a);

/// Matrices of the generators on Ind_{H^P}^H (delta o phi_t), basis N_w (x) 1, w in W^P.
struct HeckeModule {
  std::vector<int> basis;              // W^P elements
  std::vector<std::vector<QPower>> N;  // per simple reflection, dim x dim row-major
  std::vector<std::vector<QPower>> theta;      // theta_{e_j}
  std::vector<std::vector<QPower>> theta_inv;  // theta_{-e_j}
  int dim() const { return (int)basis.size(); }
};

HeckeModule induced_module(const HeckeAlgebra& H, const ParabolicData& pd, const SpectralDatum& sd,
                           const TorusPoint& t);
/// Matrix of theta_x on the module, for arbitrary x.
std::vector<QPower> module_theta(const HeckeAlgebra& H, const ParabolicData& pd, const SpectralDatum& sd,
                                 const TorusPoint& t, const std::vector<int>& basis, const Theta& x);

struct ModuleChecks {
  bool quadratic = true, braid = true, theta_commute = true, cross = true, center = true;
  bool all() const { return quadratic && braid && theta_commute && cross && center; }
};
ModuleChecks check_module(const HeckeAlgebra& H, const ParabolicData& pd, const SpectralDatum& sd,
                          const TorusPoint& t, const HeckeModule& m);

/// dim End_H of the module; numeric mode only.
int commutant_dim(const HeckeAlgebra& H, const HeckeModule& m);

}  // namespace ahrg
