#include "ahrg/elliptic.hpp"

#include <set>
#include <stdexcept>

namespace ahrg {

RealRep RealRep::from_int(const std::vector<IntMat>& mats) {
  RealRep V;
  for (const auto& m : mats) {
    RatMat r(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j) r(i, j) = m(i, j);
    V.rho.push_back(r);
  }
  return V;
}

bool RealRep::is_homomorphism(const FiniteGroup& G) const {
  if ((int)rho.size() != G.order()) return false;
  for (int a = 0; a < G.order(); ++a)
    for (int b = 0; b < G.order(); ++b)
      if (rho[a] * rho[b] != rho[G.mul(a, b)]) return false;
  return true;
}

Rational det_one_minus(const RatMat& g) { return (RatMat::identity(g.rows) - g).det(); }

std::vector<Rational> exterior_traces(const RatMat& g) {
  const int n = g.rows;
  std::vector<Rational> e(n + 1, 0);
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) idx.push_back(i);
    RatMat sub((int)idx.size(), (int)idx.size());
    for (size_t a = 0; a < idx.size(); ++a)
      for (size_t b = 0; b < idx.size(); ++b) sub((int)a, (int)b) = g(idx[a], idx[b]);
    e[idx.size()] += idx.empty() ? Rational(1) : sub.det();
  }
  return e;
}

Cyclotomic elliptic_pairing_arthur(const FiniteGroup& G, const RealRep& V, const ClassFunction& rho,
                                   const ClassFunction& rho2) {
  Cyclotomic s;
  for (int c = 0; c < G.nclasses(); ++c) {
    Rational d = det_one_minus(V.rho[G.representative(c)]);
    if (d == 0) continue;
    s += Cyclotomic(d * G.class_size(c)) * rho[c].conj() * rho2[c];
  }
  return s * Cyclotomic(ratio(1, G.order()));
}

Cyclotomic elliptic_pairing_koszul(const FiniteGroup& G, const RealRep& V, const ClassFunction& rho,
                                   const ClassFunction& rho2) {
  const int n = V.dim();
  std::vector<std::vector<Rational>> lam;
  for (int c = 0; c < G.nclasses(); ++c) lam.push_back(exterior_traces(V.rho[G.representative(c)]));
  Cyclotomic total;
  for (int i = 0; i <= n; ++i) {
    Cyclotomic h;
    for (int c = 0; c < G.nclasses(); ++c)
      h += Cyclotomic(lam[c][i] * G.class_size(c)) * rho[c].conj() * rho2[c];
    h *= Cyclotomic(ratio(1, G.order()));
    if (!h.is_rational() || !is_integer(h.rational_value()) || h.rational_value() < 0)
      throw std::runtime_error("Hom dimension is not a nonnegative integer: " + h.str());
    total += (i % 2 ? -h : h);
  }
  return total;
}

int elliptic_class_count(const FiniteGroup& G, const RealRep& V) {
  int k = 0;
  for (int c = 0; c < G.nclasses(); ++c)
    if (det_one_minus(V.rho[G.representative(c)]) != 0) ++k;
  return k;
}

CycMat elliptic_gram(const FiniteGroup& G, const RealRep& V, const CharacterTable& T, bool koszul) {
  CycMat m(T.size(), T.size());
  for (int a = 0; a < T.size(); ++a)
    for (int b = 0; b < T.size(); ++b)
      m(a, b) = koszul ? elliptic_pairing_koszul(G, V, T.chi[a], T.chi[b])
                       : elliptic_pairing_arthur(G, V, T.chi[a], T.chi[b]);
  return m;
}

RatMat rational_part(const CycMat& m) {
  RatMat r(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      if (!m(i, j).is_rational()) throw std::domain_error("matrix entry is not rational: " + m(i, j).str());
      r(i, j) = m(i, j).rational_value();
    }
  return r;
}

bool is_hermitian(const CycMat& m) {
  if (m.rows != m.cols) return false;
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m(i, j) != m(j, i).conj()) return false;
  return true;
}

// ---------------------------------------------------------------- crossed products

namespace {

using Vec = std::vector<std::int64_t>;

struct Crossed {
  const FiniteGroup& G;
  const std::vector<std::vector<int>>& act;
  int n, m;
  // Crossed product C(U) x G: index g*m + u for delta_u (x) g.
  // C(U) (x) End(C[G]): index (h*n + h')*m + u for the coefficient of h' in b(h), at u.
  size_t bidx(int h, int hp, int u) const { return ((size_t)h * n + hp) * m + u; }

  Vec L(const Vec& c) const {
    Vec b((size_t)n * n * m, 0);
    for (int g = 0; g < n; ++g)
      for (int u = 0; u < m; ++u) {
        auto x = c[(size_t)g * m + u];
        if (!x) continue;
        // L(f (x) g)(h) = alpha_{h^-1 g^-1}(f) (x) g h, and alpha_y(delta_u) = delta_{y u}.
        for (int h = 0; h < n; ++h) {
          int y = G.mul(G.inverse(h), G.inverse(g));
          b[bidx(h, G.mul(g, h), act[y][u])] += x;
        }
      }
    return b;
  }
  Vec Lprime(const Vec& b) const {
    Vec c((size_t)n * m, 0);
    for (int g = 0; g < n; ++g)
      for (int u = 0; u < m; ++u) c[(size_t)g * m + u] = b[bidx(G.inverse(g), 0, u)];
    return c;
  }
  // (g.b)(h) = sum_h' alpha_g(b(hg)_h') (x) h' g^{-1}.
  Vec act_on(int g, const Vec& b) const {
    Vec r(b.size(), 0);
    int gi = G.inverse(g);
    for (int h = 0; h < n; ++h)
      for (int hp = 0; hp < n; ++hp)
        for (int u = 0; u < m; ++u) r[bidx(h, G.mul(hp, gi), u)] = b[bidx(G.mul(h, g), hp, act[gi][u])];
    return r;
  }
  Vec mul_B(const Vec& b1, const Vec& b2) const {
    Vec r(b1.size(), 0);
    for (int h = 0; h < n; ++h)
      for (int hp = 0; hp < n; ++hp)
        for (int u = 0; u < m; ++u) {
          auto x = b2[bidx(h, hp, u)];
          if (!x) continue;
          for (int hpp = 0; hpp < n; ++hpp) r[bidx(h, hpp, u)] += x * b1[bidx(hp, hpp, u)];
        }
    return r;
  }
};

}  // namespace

CrossedProductReport crossed_product_iso_check(const FiniteGroup& G, const std::vector<std::vector<int>>& act) {
  CrossedProductReport rep;
  const int n = G.order();
  const int m = act.empty() ? 0 : (int)act[0].size();
  rep.group_order = n;
  rep.set_size = m;
  rep.action_ok = (int)act.size() == n;
  for (int a = 0; a < n && rep.action_ok; ++a)
    for (int u = 0; u < m; ++u) {
      if (act[0][u] != u) rep.action_ok = false;
      for (int b = 0; b < n; ++b)
        if (act[G.mul(a, b)][u] != act[a][act[b][u]]) rep.action_ok = false;
    }
  if (!rep.action_ok) return rep;
  Crossed X{G, act, n, m};
  const size_t dimA = (size_t)n * m;
  std::vector<Vec> images;
  rep.lands_in_invariants = rep.left_inverse = true;
  for (size_t i = 0; i < dimA; ++i) {
    Vec c(dimA, 0);
    c[i] = 1;
    Vec b = X.L(c);
    for (int g = 0; g < n && rep.lands_in_invariants; ++g)
      if (X.act_on(g, b) != b) rep.lands_in_invariants = false;
    if (X.Lprime(b) != c) rep.left_inverse = false;
    images.push_back(std::move(b));
  }
  // (delta_u (x) g)(delta_v (x) g') = [u = g v] delta_u (x) g g'.
  rep.multiplicative = true;
  for (int g = 0; g < n && rep.multiplicative; ++g)
    for (int u = 0; u < m && rep.multiplicative; ++u)
      for (int g2 = 0; g2 < n && rep.multiplicative; ++g2)
        for (int v = 0; v < m && rep.multiplicative; ++v) {
          Vec prod(dimA, 0);
          if (u == act[g][v]) prod[(size_t)G.mul(g, g2) * m + u] = 1;
          Vec lhs = X.L(prod);
          Vec rhs = X.mul_B(images[(size_t)g * m + u], images[(size_t)g2 * m + v]);
          if (lhs != rhs) rep.multiplicative = false;
        }
  // Invariants are spanned by orbit sums of basis tensors; distinct orbits
  // have disjoint supports, so their number is the invariant dimension.
  std::set<size_t> done;
  rep.right_inverse = true;
  const size_t dimB = (size_t)n * n * m;
  for (size_t i = 0; i < dimB; ++i) {
    if (done.count(i)) continue;
    Vec e(dimB, 0);
    e[i] = 1;
    Vec sum(dimB, 0);
    for (int g = 0; g < n; ++g) {
      Vec t = X.act_on(g, e);
      for (size_t j = 0; j < dimB; ++j)
        if (t[j]) {
          sum[j] += t[j];
          done.insert(j);
        }
    }
    ++rep.invariant_dim;
    if (X.L(X.Lprime(sum)) != sum) rep.right_inverse = false;
  }
  if (rep.invariant_dim != (int)dimA) rep.right_inverse = false;
  return rep;
}

MoritaReport morita_induced_check(const FiniteGroup& G, const CharacterTable& T, int sigma) {
  MoritaReport rep;
  rep.sigma = sigma;
  const int n = G.order();
  const long dsig = T.degrees[sigma];
  // Projector onto the sigma-isotypic part of C[G] under left translation.
  CycMat P(n, n);
  for (int h = 0; h < n; ++h) {
    Cyclotomic c = T.chi[sigma][G.class_of(h)].conj() * Cyclotomic(ratio(dsig, n));
    for (int x = 0; x < n; ++x) P(G.mul(h, x), x) += c;
  }
  if (P * P != P) throw std::logic_error("isotypic projector is not idempotent");
  int r = P.rank();
  if (r % dsig != 0) throw std::logic_error("isotypic rank is not a multiple of the degree");
  rep.multiplicity_dim = r / (int)dsig;
  // G acts on the multiplicity space by x -> x g^{-1}; its trace is tr(P R_g) / dim sigma.
  for (int c = 0; c < G.nclasses(); ++c) {
    int g = G.representative(c), gi = G.inverse(g);
    Cyclotomic tr;
    for (int x = 0; x < n; ++x) tr += P(x, G.mul(x, gi));
    rep.character.push_back(tr * Cyclotomic(ratio(1, dsig)));
  }
  for (int a = 0; a < T.size(); ++a)
    if (T.chi[a] == rep.character) rep.matches = a;
  rep.expected = dual_characters(T)[sigma];
  return rep;
}

}  // namespace ahrg
