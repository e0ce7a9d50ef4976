#include "ahrg/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace ahrg {

WeylGroup::WeylGroup(const RootDatum& d, std::size_t order_bound) : d_(&d) {
  const int n = d.rank();
  std::vector<IntMat> gens;
  for (int k = 0; k < d.semisimple_rank(); ++k) gens.push_back(d.reflection_X(d.simple_root(k)));
  mats_.push_back(IntMat::identity(n));
  len_.push_back(0);
  words_.push_back({});
  index_[mats_[0]] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int w = queue.front();
    queue.pop_front();
    for (int k = 0; k < (int)gens.size(); ++k) {
      IntMat m = mats_[w] * gens[k];
      if (index_.count(m)) continue;
      if (mats_.size() >= order_bound) throw std::runtime_error("Weyl group order exceeds configured bound");
      int id = (int)mats_.size();
      index_[m] = id;
      mats_.push_back(m);
      len_.push_back(len_[w] + 1);
      auto wd = words_[w];
      wd.push_back(k);
      words_.push_back(wd);
      queue.push_back(id);
    }
  }
  for (auto& g : gens) simple_.push_back(index_.at(g));
  perm_.resize(mats_.size());
  inv_.resize(mats_.size());
  for (int w = 0; w < order(); ++w) {
    perm_[w].resize(d.nroots());
    int neg = 0;
    for (int i = 0; i < d.nroots(); ++i) {
      int j = d.find_root(mats_[w] * d.root(i));
      if (j < 0) throw std::logic_error("Weyl element does not permute roots");
      perm_[w][i] = j;
      if (d.is_positive(i) && !d.is_positive(j)) ++neg;
    }
    if (neg != len_[w]) throw std::logic_error("length differs from inversion count");
    inv_[w] = find(unimodular_inverse(mats_[w]));
  }
  if (order() <= 2048) {
    table_.resize((size_t)order() * order());
    for (int a = 0; a < order(); ++a)
      for (int b = 0; b < order(); ++b) table_[(size_t)a * order() + b] = index_.at(mats_[a] * mats_[b]);
  }
}

int WeylGroup::find(const IntMat& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

int WeylGroup::mul(int a, int b) const {
  if (!table_.empty()) return table_[(size_t)a * order() + b];
  return index_.at(mats_[a] * mats_[b]);
}

int WeylGroup::longest() const {
  return (int)(std::max_element(len_.begin(), len_.end()) - len_.begin());
}

std::vector<int> WeylGroup::parabolic_subgroup(const std::vector<int>& P) const {
  std::set<int> seen{0};
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int w = queue.front();
    queue.pop_front();
    for (int k : P) {
      int u = mul(w, simple_[k]);
      if (seen.insert(u).second) queue.push_back(u);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<int> WeylGroup::coset_reps(const std::vector<int>& P) const {
  std::vector<int> out;
  for (int w = 0; w < order(); ++w) {
    bool ok = true;
    for (int k : P)
      if (!d_->is_positive(perm_[w][d_->simple_root(k)])) ok = false;
    if (ok) out.push_back(w);
  }
  std::stable_sort(out.begin(), out.end(), [&](int a, int b) { return len_[a] < len_[b]; });
  return out;
}

std::vector<int> WeylGroup::mapping(const std::vector<int>& P, const std::vector<int>& Q) const {
  std::set<int> qs;
  for (int k : Q) qs.insert(d_->simple_root(k));
  std::vector<int> out;
  if (P.size() != qs.size()) return out;
  for (int w = 0; w < order(); ++w) {
    std::set<int> img;
    for (int k : P) img.insert(perm_[w][d_->simple_root(k)]);
    if (img == qs) out.push_back(w);
  }
  return out;
}

int KGroup::find(const TorusPoint& k) const {
  for (size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == k) return (int)i;
  return -1;
}

KGroup kp_group(const RootDatum& d, const ParabolicData& pd) {
  const int n = d.rank();
  // Generators of (X cap QP) + (X cap P^vee-perp) as columns.
  IntMat L(n, pd.span_basis.cols + pd.perp_basis.cols);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < pd.span_basis.cols; ++j) L(i, j) = pd.span_basis(i, j);
    for (int j = 0; j < pd.perp_basis.cols; ++j) L(i, pd.span_basis.cols + j) = pd.perp_basis(i, j);
  }
  SmithForm s = smith_normal_form(L);
  if (s.rank() != n) throw std::logic_error("K_P sublattice is not of full rank");
  KGroup K;
  std::vector<int> cyc;  // rows of U with d_i > 1
  for (int i = 0; i < n; ++i)
    if (s.diag[i] > 1) {
      cyc.push_back(i);
      K.invariants.push_back(s.diag[i]);
    }
  // Characters x -> sum_i a_i (U x)_i / d_i.
  std::vector<std::int64_t> a(cyc.size(), 0);
  for (;;) {
    TorusPoint t(n);
    for (int j = 0; j < n; ++j) {
      Rational tor = 0;
      for (size_t c = 0; c < cyc.size(); ++c) tor += ratio(a[c] * s.U(cyc[c], j), s.diag[cyc[c]]);
      t.torsion[j] = frac_mod1(tor);
    }
    K.elements.push_back(t);
    size_t c = 0;
    while (c < a.size() && ++a[c] == s.diag[cyc[c]]) a[c++] = 0;
    if (c == a.size()) break;
  }
  for (const auto& k : K.elements)
    if (!pd.in_upper_torus(k) || !pd.in_lower_torus(k)) throw std::logic_error("K_P element outside T_P cap T^P");
  return K;
}

Groupoid::Groupoid(const WeylGroup& W, const std::vector<int>& P)
    : W_(&W), pd_(parabolic_data(W.datum(), P)), K_(kp_group(W.datum(), pd_)) {
  wpp_ = W.mapping(pd_.P, pd_.P);
  for (int w : wpp_)
    for (int k = 0; k < (int)K_.elements.size(); ++k) arrows_.push_back({w, k});
}

Arrow Groupoid::compose(const Arrow& a1, const Arrow& a2) const {
  Arrow r;
  r.w = W_->mul(a1.w, a2.w);
  TorusPoint k1 = W_->act(W_->inverse(a2.w), K_.elements[a1.k]);
  int k = K_.find(k1 * K_.elements[a2.k]);
  if (k < 0) throw std::logic_error("groupoid composition left K_P");
  r.k = k;
  return r;
}

Arrow Groupoid::inverse(const Arrow& a) const {
  // (w, k)^{-1} = (w^{-1}, w(k)^{-1}).
  Arrow r;
  r.w = W_->inverse(a.w);
  int k = K_.find(W_->act(a.w, K_.elements[a.k]).inverse());
  if (k < 0) throw std::logic_error("groupoid inverse left K_P");
  r.k = k;
  return r;
}

TorusPoint Groupoid::act(const Arrow& a, const TorusPoint& t) const {
  return W_->act(a.w, K_.elements[a.k] * t);
}

IntMat Groupoid::upper_action(int w) const {
  const int n = W_->datum().rank();
  const int r = pd_.upper_rank();
  IntMat M = unimodular_inverse(pd_.upper_coords);
  IntMat out(r, r);
  for (int j = 0; j < r; ++j) {
    IntVec img = pd_.to_upper(W_->act(w, M.col(pd_.span_basis.cols + j)));
    for (int i = 0; i < r; ++i) out(i, j) = img[i];
  }
  (void)n;
  return out;
}

std::vector<Arrow> groupoid_arrows(const WeylGroup& W, const std::vector<int>& P, const std::vector<int>& Q) {
  ParabolicData pd = parabolic_data(W.datum(), P);
  KGroup K = kp_group(W.datum(), pd);
  std::vector<Arrow> out;
  for (int w : W.mapping(pd.P, Q))
    for (int k = 0; k < (int)K.elements.size(); ++k) out.push_back({w, k});
  return out;
}

std::vector<Arrow> stabilizer(const Groupoid& G, const TorusPoint& t,
                              const std::function<bool(const Arrow&)>& compat) {
  std::vector<Arrow> out;
  for (const auto& a : G.self_arrows())
    if (G.act(a, t) == t && (!compat || compat(a))) out.push_back(a);
  return out;
}

}  // namespace ahrg
