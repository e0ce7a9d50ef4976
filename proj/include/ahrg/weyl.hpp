#pragma once

#include "ahrg/rootdata.hpp"

#include <functional>
#include <map>
#include <vector>

namespace ahrg {

/// The finite Weyl group W_0 enumerated as integer matrices on X.
/// Element 0 is the identity.
class WeylGroup {
 public:
  explicit WeylGroup(const RootDatum& d, std::size_t order_bound = 1000000);

  const RootDatum& datum() const { return *d_; }
  int order() const { return (int)mats_.size(); }
  const IntMat& matrix(int w) const { return mats_[w]; }
  int length(int w) const { return len_[w]; }
  const std::vector<int>& word(int w) const { return words_[w]; }
  /// Root index of w(root i).
  int act_root(int w, int i) const { return perm_[w][i]; }
  int simple_reflection(int k) const { return simple_[k]; }
  int mul(int a, int b) const;
  int inverse(int w) const { return inv_[w]; }
  int find(const IntMat& m) const;
  int longest() const;

  IntVec act(int w, const IntVec& x) const { return mats_[w] * x; }
  TorusPoint act(int w, const TorusPoint& t) const { return t.transformed(mats_[inv_[w]]); }

  /// Subgroup generated by the simple reflections in P.
  std::vector<int> parabolic_subgroup(const std::vector<int>& P) const;
  /// Minimal length representatives of W_0 / W_P: w(alpha) > 0 for alpha in P.
  std::vector<int> coset_reps(const std::vector<int>& P) const;
  /// Elements w with w(P) = Q as sets of simple roots.
  std::vector<int> mapping(const std::vector<int>& P, const std::vector<int>& Q) const;

 private:
  const RootDatum* d_;
  std::vector<IntMat> mats_;
  std::vector<int> len_, inv_, simple_;
  std::vector<std::vector<int>> words_, perm_;
  std::map<IntMat, int> index_;
  std::vector<int> table_;  // order^2 when small, else empty
};

/// The finite group K_P = T_P cap T^P as characters of X.
struct KGroup {
  std::vector<TorusPoint> elements;  // element 0 is the identity
  std::vector<std::int64_t> invariants;
  int find(const TorusPoint& k) const;
};
KGroup kp_group(const RootDatum& d, const ParabolicData& pd);

/// Arrow (w, k) of the groupoid, from P to w(P); k lies in K_P.
struct Arrow {
  int w = 0;
  int k = 0;  // index into the K_P of the source
};

/// Arrows between standard parabolics with composition and action on points.
class Groupoid {
 public:
  Groupoid(const WeylGroup& W, const std::vector<int>& P);

  const WeylGroup& weyl() const { return *W_; }
  const ParabolicData& parabolic() const { return pd_; }
  const KGroup& K() const { return K_; }
  /// All arrows P -> P.
  const std::vector<Arrow>& self_arrows() const { return arrows_; }
  std::size_t weyl_part_order() const { return wpp_.size(); }

  /// (w1, k1) o (w2, k2) = (w1 w2, w2^{-1}(k1) k2) for arrows P -> P.
  Arrow compose(const Arrow& a1, const Arrow& a2) const;
  Arrow inverse(const Arrow& a) const;
  bool is_identity(const Arrow& a) const { return a.w == 0 && a.k == 0; }
  bool equal(const Arrow& a, const Arrow& b) const { return a.w == b.w && a.k == b.k; }
  /// (w, k) t = w(k t).
  TorusPoint act(const Arrow& a, const TorusPoint& t) const;
  /// Linear part of w on X^P, in upper coordinates (columns are images).
  IntMat upper_action(int w) const;

 private:
  const WeylGroup* W_;
  ParabolicData pd_;
  KGroup K_;
  std::vector<int> wpp_;
  std::vector<Arrow> arrows_;
};

/// Arrows P -> Q in a general groupoid: pairs (w, k) with w(P) = Q, k in K_P.
std::vector<Arrow> groupoid_arrows(const WeylGroup& W, const std::vector<int>& P, const std::vector<int>& Q);

/// Stabilizer {a : compat(a) and a(t) = t} among arrows P -> P.
std::vector<Arrow> stabilizer(const Groupoid& G, const TorusPoint& t,
                              const std::function<bool(const Arrow&)>& compat);

}  // namespace ahrg
