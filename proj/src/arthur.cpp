#include "ahrg/arthur.hpp"

#include <algorithm>
#include <stdexcept>

namespace ahrg {

FiniteGroup arrow_group(const Groupoid& G, const std::vector<Arrow>& arrows) {
  if (arrows.empty() || !G.is_identity(arrows[0])) throw std::invalid_argument("arrow list must start with the identity");
  const int n = (int)arrows.size();
  auto find = [&](const Arrow& a) {
    for (int i = 0; i < n; ++i)
      if (G.equal(arrows[i], a)) return i;
    throw std::invalid_argument("arrow list is not closed under composition");
  };
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = find(G.compose(arrows[a], arrows[b]));
  return FiniteGroup(std::move(t));
}

RealRep arrow_action(const Groupoid& G, const std::vector<Arrow>& arrows) {
  RealRep V;
  for (const auto& a : arrows) V.rho.push_back(arrow_linear_part(G, a));
  return V;
}

Cyclotomic ep_pair(const FiniteGroup& G, const RealRep& V, const std::vector<Cyclotomic>& rho,
                   const std::vector<Cyclotomic>& rho2) {
  Cyclotomic s;
  for (int r = 0; r < G.order(); ++r) {
    Rational d = det_one_minus(V.rho[r]);
    if (d != 0) s += Cyclotomic(d) * rho[r].conj() * rho2[r];
  }
  return s * Cyclotomic(ratio(1, G.order()));
}

namespace {

void finish_gram(GramReport& g) {
  g.hermitian = is_hermitian(g.gram);
  g.rank = g.gram.rank();
  try {
    g.psd = g.hermitian && is_psd(rational_part(g.gram));
  } catch (const std::domain_error&) {
    g.psd = false;
  }
  g.elliptic_classes = elliptic_class_count(g.group, g.action);
  g.rank_matches = g.rank == g.elliptic_classes;
  g.induced_vanishing = induced_vanishing_check(g);
}

}  // namespace

GramReport arthur_gram(const Groupoid& G, const RGroupData& R, const TwistedTable* twisted) {
  GramReport g;
  g.rgroup_order = (int)R.rgroup.size();
  g.group = arrow_group(G, R.rgroup);
  g.action = arrow_action(G, R.rgroup);
  g.experimental = R.nontempered && !R.xi.t.is_unitary();
  g.label = R.xi.delta.name + " @ " + R.xi.t.str();
  if (!twisted) {
    g.table = character_table(g.group);
    for (int i = 0; i < g.table.size(); ++i) {
      g.row_names.push_back("chi" + std::to_string(i));
      g.degrees.push_back(Cyclotomic((long)g.table.degrees[i]));
    }
    g.gram = elliptic_gram(g.group, g.action, g.table);
    g.koszul_agrees = elliptic_gram(g.group, g.action, g.table, true) == g.gram;
  } else {
    g.twisted = true;
    const int m = (int)twisted->values.size();
    for (int i = 0; i < m; ++i) {
      if ((int)twisted->values[i].size() != g.rgroup_order)
        throw std::invalid_argument("twisted character row has the wrong length");
      if (twisted->cocycle[i] != twisted->cocycle[0]) throw std::invalid_argument("mismatched cocycle declarations");
      g.row_names.push_back(twisted->names[i]);
      g.degrees.push_back(twisted->values[i][0]);
    }
    g.gram = CycMat(m, m);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) g.gram(a, b) = ep_pair(g.group, g.action, twisted->values[a], twisted->values[b]);
  }
  finish_gram(g);
  return g;
}

bool induced_vanishing_check(const GramReport& g) {
  for (int i = 0; i < g.gram.rows; ++i) {
    Cyclotomic s;
    for (int j = 0; j < g.gram.cols; ++j) s += g.gram(i, j) * g.degrees[j];
    if (!s.is_zero()) return false;
  }
  return true;
}

int ell_rank(const GramReport& g) { return g.gram.rank(); }

Q1Report q1_isometry_check(const WeylGroup& W, const TorusPoint& t) {
  const RootDatum& d = W.datum();
  if (!t.is_unitary()) throw std::invalid_argument("q1 check needs a torsion point");
  Q1Report rep;
  Parameters q = Parameters::equal(d, VMode{}, 0);
  HeckeAlgebra H(W, q);
  Groupoid G(W, {});
  SpectralDatum sd = one_dim_reps(H, G.parabolic())[0];
  RGroupData R = rgroup(G, q, InductionDatum{{}, sd, t});
  rep.gram = arthur_gram(G, R);
  rep.arthur = rep.gram.gram;
  rep.rank = rep.gram.rank;
  // Oracle side: the stabilizer W_t with its action on X (x) Q.
  std::vector<int> wt;
  for (int w = 0; w < W.order(); ++w)
    if (W.act(w, t) == t) wt.push_back(w);
  std::vector<std::vector<int>> tab(wt.size(), std::vector<int>(wt.size()));
  for (size_t a = 0; a < wt.size(); ++a)
    for (size_t b = 0; b < wt.size(); ++b)
      tab[a][b] = (int)(std::find(wt.begin(), wt.end(), W.mul(wt[a], wt[b])) - wt.begin());
  FiniteGroup Wt(tab);
  std::vector<IntMat> mats;
  for (int w : wt) mats.push_back(W.matrix(w));
  RealRep V = RealRep::from_int(mats);
  CharacterTable T = character_table(Wt);
  CycMat oracle = elliptic_gram(Wt, V, T, true);
  // Match characters through their values on common Weyl elements.
  const int n = rep.gram.table.size();
  std::vector<int> perm(n, -1);
  rep.rows_matched = (int)wt.size() == rep.gram.rgroup_order && T.size() == n;
  std::vector<int> pos(R.rgroup.size(), -1);
  for (size_t i = 0; i < R.rgroup.size(); ++i) {
    auto it = std::find(wt.begin(), wt.end(), R.rgroup[i].w);
    if (it == wt.end()) rep.rows_matched = false;
    else pos[i] = (int)(it - wt.begin());
  }
  if (rep.rows_matched)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < T.size(); ++b) {
        bool same = true;
        for (size_t i = 0; i < R.rgroup.size() && same; ++i)
          same = rep.gram.table.chi[a][rep.gram.group.class_of((int)i)] == T.chi[b][Wt.class_of(pos[i])];
        if (same) perm[a] = b;
      }
  for (int a = 0; a < n; ++a)
    if (perm[a] < 0) rep.rows_matched = false;
  if (!rep.rows_matched) return rep;
  rep.oracle = CycMat(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) rep.oracle(a, b) = oracle(perm[a], perm[b]);
  rep.equal = rep.oracle == rep.arthur;
  return rep;
}

}  // namespace ahrg
