#include "ahrg/hecke.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace ahrg {

// ---------------------------------------------------------------- parameters

Parameters::Parameters(const RootDatum& d, const VMode& mode, const std::map<int, Rational>& full,
                       const std::map<int, Rational>& half, const Rational& default_full,
                       const Rational& default_half)
    : mode_(mode), full_(d.nroots()), half_(d.nroots()), orbit_(d.nroots(), -1) {
  std::vector<IntMat> refl;
  for (int k = 0; k < d.semisimple_rank(); ++k) refl.push_back(d.reflection_X(d.simple_root(k)));
  for (int k = 0; k < d.semisimple_rank(); ++k) {
    int s = d.simple_root(k);
    if (orbit_[s] >= 0) {
      int o = orbit_[s];
      auto same = [&](const std::map<int, Rational>& m) {
        bool a = m.count(k), b = m.count(o);
        return a == b && (!a || m.at(k) == m.at(o));
      };
      if (!same(full) || !same(half))
        throw std::invalid_argument("parameters are not W_0-invariant: simple roots a" + std::to_string(k + 1) +
                                    " and a" + std::to_string(o + 1) + " are conjugate");
      continue;
    }
    std::deque<int> queue{s};
    orbit_[s] = k;
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      for (auto& r : refl) {
        int j = d.find_root(r * d.root(i));
        if (orbit_[j] < 0) orbit_[j] = k, queue.push_back(j);
      }
    }
  }
  for (int i = 0; i < d.nroots(); ++i) {
    int k = orbit_[i];
    full_[i] = full.count(k) ? full.at(k) : default_full;
    if (d.coroot_in_2Y(i)) {
      half_[i] = half.count(k) ? half.at(k) : default_half;
    } else {
      if (half.count(k) && half.at(k) != 0)
        throw std::invalid_argument("q_{alpha^vee/2} given for a root with alpha^vee outside 2Y");
      half_[i] = 0;
    }
  }
}

QPower Parameters::sqrt_difference(const Rational& e) const { return v(e / 2) - v(-e / 2); }

bool Parameters::all_trivial() const {
  for (size_t i = 0; i < full_.size(); ++i)
    if (full_[i] != 0 || half_[i] != 0) return false;
  return true;
}

// ---------------------------------------------------------------- elements

HeckeElement hecke_theta(const Theta& x) { return {{{x, 0}, QPower(1)}}; }

HeckeElement hecke_N(int w, int rank) { return {{{Theta(rank, 0), w}, QPower(1)}}; }

namespace {

template <class M, class K>
void accumulate(M& m, const K& key, const QPower& c) {
  if (c.is_zero()) return;
  auto it = m.find(key);
  if (it == m.end()) {
    m.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) m.erase(it);
}

Theta add(const Theta& a, const Theta& b) {
  Theta r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] = checked_add(r[i], b[i]);
  return r;
}

Theta axpy(const Theta& x, std::int64_t c, const IntVec& a) {  // x + c a
  Theta r = x;
  for (size_t i = 0; i < r.size(); ++i) r[i] = checked_add(r[i], checked_mul(c, a[i]));
  return r;
}

}  // namespace

HeckeElement hecke_add(const HeckeElement& a, const HeckeElement& b) {
  HeckeElement r = a;
  for (const auto& [k, c] : b) accumulate(r, k, c);
  return r;
}

HeckeElement hecke_scale(const HeckeElement& a, const QPower& c) {
  HeckeElement r;
  for (const auto& [k, x] : a) accumulate(r, k, x * c);
  return r;
}

bool hecke_equal(const HeckeElement& a, const HeckeElement& b) {
  HeckeElement d = a;
  for (const auto& [k, c] : b) accumulate(d, k, -c);
  return d.empty();
}

// ---------------------------------------------------------------- algebra

const std::map<Theta, QPower>& HeckeAlgebra::cross_term(int k, const Theta& x) const {
  auto key = std::make_pair(k, x);
  auto it = cross_.find(key);
  if (it != cross_.end()) return it->second;
  const RootDatum& d = datum();
  const int ai = d.simple_root(k);
  const IntVec& a = d.root(ai);
  const IntVec& ac = d.coroot(ai);
  const std::int64_t n = dot(x, ac);
  const Theta sx = axpy(x, -n, a);
  std::map<Theta, QPower> out;
  if (!d.coroot_in_2Y(ai)) {
    QPower c = q_.sqrt_difference(q_.qs_exp(ai));
    if (n > 0)
      for (std::int64_t j = 0; j < n; ++j) accumulate(out, axpy(x, -j, a), c);
    else
      for (std::int64_t j = 0; j < -n; ++j) accumulate(out, axpy(sx, -j, a), -c);
  } else {
    if (n % 2) throw std::logic_error("odd pairing with a coroot in 2Y");
    const std::int64_t m = n / 2;
    QPower c1 = q_.sqrt_difference(q_.qs_exp(ai));
    QPower c0 = q_.sqrt_difference(q_.qs_prime_exp(ai));
    std::map<Theta, QPower> base;
    if (m > 0)
      for (std::int64_t j = 0; j < m; ++j) accumulate(base, axpy(x, -2 * j, a), QPower(1));
    else
      for (std::int64_t j = 0; j < -m; ++j) accumulate(base, axpy(sx, -2 * j, a), QPower(-1));
    for (const auto& [y, c] : base) {
      accumulate(out, y, c * c1);
      accumulate(out, axpy(y, -1, a), c * c0);
    }
  }
  return cross_[key] = std::move(out);
}

const std::map<int, QPower>& HeckeAlgebra::finite_product(int a, int b) const {
  auto key = std::make_pair(a, b);
  auto it = fin_.find(key);
  if (it != fin_.end()) return it->second;
  std::map<int, QPower> out;
  if (b == 0) {
    out.emplace(a, QPower(1));
  } else {
    const WeylGroup& W = *W_;
    int k = W.word(b).back();
    int s = W.simple_reflection(k);
    int b2 = W.mul(b, s);
    QPower c = q_.sqrt_difference(q_.qs_exp(datum().simple_root(k)));
    std::map<int, QPower> left = finite_product(a, b2);
    for (const auto& [u, x] : left) {
      int us = W.mul(u, s);
      accumulate(out, us, x);
      if (W.length(us) < W.length(u)) accumulate(out, u, x * c);
    }
  }
  return fin_[key] = std::move(out);
}

const NThetaElement& HeckeAlgebra::theta_times_N(const Theta& x, int w) const {
  auto key = std::make_pair(x, w);
  auto it = tn_.find(key);
  if (it != tn_.end()) return it->second;
  NThetaElement out;
  if (w == 0) {
    out.emplace(std::make_pair(0, x), QPower(1));
  } else {
    const WeylGroup& W = *W_;
    int k = W.word(w).front();
    int s = W.simple_reflection(k);
    int w2 = W.mul(s, w);
    const IntVec& a = datum().root(datum().simple_root(k));
    Theta sx = axpy(x, -dot(x, datum().coroot(datum().simple_root(k))), a);
    // theta_x N_s N_{w2} = N_s (theta_{sx} N_{w2}) + sum_y c_y theta_y N_{w2}.
    NThetaElement first = theta_times_N(sx, w2);
    for (const auto& [uz, c] : first)
      for (const auto& [v, e] : finite_product(s, uz.first)) accumulate(out, std::make_pair(v, uz.second), c * e);
    std::map<Theta, QPower> cross = cross_term(k, x);
    for (const auto& [y, c] : cross) {
      NThetaElement part = theta_times_N(y, w2);
      for (const auto& [uz, e] : part) accumulate(out, uz, c * e);
    }
  }
  return tn_[key] = std::move(out);
}

const HeckeElement& HeckeAlgebra::N_times_theta(int w, const Theta& y) const {
  auto key = std::make_pair(w, y);
  auto it = nt_.find(key);
  if (it != nt_.end()) return it->second;
  HeckeElement out;
  if (w == 0) {
    out.emplace(std::make_pair(y, 0), QPower(1));
  } else {
    const WeylGroup& W = *W_;
    int k = W.word(w).front();
    int s = W.simple_reflection(k);
    int w2 = W.mul(s, w);
    const int ai = datum().simple_root(k);
    HeckeElement inner = N_times_theta(w2, y);
    // N_s theta_z = theta_{sz} N_s - cross(s, sz).
    for (const auto& [zu, c] : inner) {
      const Theta& z = zu.first;
      Theta sz = axpy(z, -dot(z, datum().coroot(ai)), datum().root(ai));
      for (const auto& [v, e] : finite_product(s, zu.second)) accumulate(out, std::make_pair(sz, v), c * e);
      std::map<Theta, QPower> cross = cross_term(k, sz);
      for (const auto& [yy, e] : cross) accumulate(out, std::make_pair(yy, zu.second), -(c * e));
    }
  }
  return nt_[key] = std::move(out);
}

HeckeElement HeckeAlgebra::multiply(const HeckeElement& a, const HeckeElement& b) const {
  HeckeElement out;
  for (const auto& [xw, c] : a)
    for (const auto& [yu, d] : b) {
      HeckeElement mid = N_times_theta(xw.second, yu.first);
      for (const auto& [zv, e] : mid) {
        Theta xz = add(xw.first, zv.first);
        QPower f = c * d * e;
        for (const auto& [u, g] : finite_product(zv.second, yu.second)) accumulate(out, std::make_pair(xz, u), f * g);
      }
    }
  return out;
}

// ---------------------------------------------------------------- one-dim reps

namespace {

// Characters of X trivial on the columns of K with prescribed values on the
// given X-vectors; all torsion extensions.
std::vector<TorusPoint> characters_with_values(const IntMat& K, const std::vector<IntVec>& xs,
                                               const std::vector<PhaseMonomial>& vals, int n) {
  IntMat L(n, K.cols + (int)xs.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < K.cols; ++j) L(i, j) = K(i, j);
    for (size_t j = 0; j < xs.size(); ++j) L(i, K.cols + (int)j) = xs[j][i];
  }
  if (L.cols != n) throw std::logic_error("character system is not square");
  auto Li = rational_inverse(L);  // Li * L = I; solution tau^T = b^T Li
  RatVec bt(n, 0), be(n, 0);
  for (size_t j = 0; j < xs.size(); ++j) bt[K.cols + j] = vals[j].turn, be[K.cols + j] = vals[j].vexp;
  TorusPoint base(n);
  for (int i = 0; i < n; ++i) {
    Rational t = 0, e = 0;
    for (int j = 0; j < n; ++j) t += bt[j] * Li[j][i], e += be[j] * Li[j][i];
    base.torsion[i] = frac_mod1(t);
    base.exponent[i] = e;
  }
  SmithForm s = smith_normal_form(L);
  std::vector<int> cyc;
  for (int i = 0; i < n; ++i)
    if (s.diag[i] > 1) cyc.push_back(i);
  std::vector<TorusPoint> out;
  std::vector<std::int64_t> a(cyc.size(), 0);
  for (;;) {
    TorusPoint t = base;
    for (int j = 0; j < n; ++j) {
      Rational tor = t.torsion[j];
      for (size_t c = 0; c < cyc.size(); ++c) tor += ratio(a[c] * s.U(cyc[c], j), s.diag[cyc[c]]);
      t.torsion[j] = frac_mod1(tor);
    }
    out.push_back(t);
    size_t c = 0;
    while (c < a.size() && ++a[c] == s.diag[cyc[c]]) a[c++] = 0;
    if (c == a.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<SpectralDatum> one_dim_reps(const HeckeAlgebra& H, const ParabolicData& pd) {
  const RootDatum& d = H.datum();
  const Parameters& q = H.params();
  std::vector<SpectralDatum> out;
  if (pd.P.empty()) {
    SpectralDatum sd;
    sd.name = "trivial";
    sd.r = TorusPoint(d.rank());
    sd.discrete = true;
    out.push_back(sd);
    return out;
  }
  // Classes of simple reflections in P joined by odd braid relations.
  std::vector<int> cls(pd.P.size());
  for (size_t i = 0; i < cls.size(); ++i) cls[i] = (int)i;
  auto findc = [&](int i) {
    while (cls[i] != i) i = cls[i];
    return i;
  };
  for (size_t i = 0; i < pd.P.size(); ++i)
    for (size_t j = 0; j < pd.P.size(); ++j) {
      int a = d.simple_root(pd.P[i]), b = d.simple_root(pd.P[j]);
      if (i != j && dot(d.root(a), d.coroot(b)) * dot(d.root(b), d.coroot(a)) == 1) cls[findc(i)] = findc(j);
    }
  std::vector<int> reps;
  for (size_t i = 0; i < pd.P.size(); ++i)
    if (findc(i) == (int)i) reps.push_back((int)i);
  const int nc = (int)reps.size();
  for (int mask = 0; mask < (1 << nc); ++mask) {
    // Per simple root in P: sign choice and the admissible values of chi(alpha).
    std::vector<std::vector<PhaseMonomial>> choices(pd.P.size());
    std::map<int, QPower> eps;
    bool all_plus = true, all_minus = true;
    for (size_t i = 0; i < pd.P.size(); ++i) {
      int ci = (int)(std::find(reps.begin(), reps.end(), findc(i)) - reps.begin());
      bool plus = !((mask >> ci) & 1);
      all_plus = all_plus && plus;
      all_minus = all_minus && !plus;
      int ai = d.simple_root(pd.P[i]);
      Rational S = q.qs_exp(ai), Sp = q.qs_prime_exp(ai);
      eps[pd.P[i]] = plus ? q.v(S / 2) : -q.v(-S / 2);
      if (!d.coroot_in_2Y(ai)) {
        choices[i].push_back(PhaseMonomial(0, plus ? S : -S));
      } else if (plus) {
        choices[i].push_back(PhaseMonomial(0, (S + Sp) / 2));
        choices[i].push_back(PhaseMonomial(ratio(1, 2), (S - Sp) / 2));
      } else {
        choices[i].push_back(PhaseMonomial(0, -(S + Sp) / 2));
        choices[i].push_back(PhaseMonomial(ratio(1, 2), (Sp - S) / 2));
      }
    }
    // Cartesian product over the value choices.
    std::vector<size_t> idx(pd.P.size(), 0);
    for (;;) {
      std::vector<IntVec> xs;
      std::vector<PhaseMonomial> vals;
      std::string tag;
      for (size_t i = 0; i < pd.P.size(); ++i) {
        xs.push_back(d.root(d.simple_root(pd.P[i])));
        vals.push_back(choices[i][idx[i]]);
        if (choices[i].size() > 1) tag += std::to_string(idx[i]);
      }
      auto chars = characters_with_values(pd.perp_basis, xs, vals, d.rank());
      for (size_t c = 0; c < chars.size(); ++c) {
        SpectralDatum sd;
        sd.P = pd.P;
        sd.r = chars[c];
        sd.eps = eps;
        sd.name = all_plus ? "triv" : all_minus ? "St" : "sign" + std::to_string(mask);
        if (!tag.empty()) sd.name += "/" + tag;
        if (chars.size() > 1) sd.name += "#" + std::to_string(c);
        // log|r| = sum c_k alpha_k^vee; discrete iff every c_k < 0.
        RatMat A(d.rank(), (int)pd.P.size() + 1);
        for (size_t k = 0; k < pd.P.size(); ++k)
          for (int i = 0; i < d.rank(); ++i) A(i, (int)k) = d.coroot(d.simple_root(pd.P[k]))[i];
        for (int i = 0; i < d.rank(); ++i) A(i, (int)pd.P.size()) = sd.r.exponent[i];
        auto piv = A.rref();
        bool disc = piv.size() == pd.P.size();
        for (size_t k = 0; k < pd.P.size() && disc; ++k) disc = A((int)k, (int)pd.P.size()) < 0;
        sd.discrete = disc;
        out.push_back(sd);
      }
      size_t i = 0;
      while (i < idx.size() && ++idx[i] == choices[i].size()) idx[i++] = 0;
      if (i == idx.size()) break;
    }
  }
  return out;
}

Rational cc_norm(const RootDatum& d, const SpectralDatum& sd) { return d.norm2_Y(sd.r.exponent); }

bool delta_invariant(const Groupoid& G, const SpectralDatum& sd, const Arrow& a) {
  if (!sd.realized()) {
    for (const auto& b : sd.declared_stabilizer)
      if (G.equal(a, b)) return true;
    return false;
  }
  const WeylGroup& W = G.weyl();
  const RootDatum& d = W.datum();
  const TorusPoint& k = G.K().elements[a.k];
  if (W.act(a.w, sd.r * k.inverse()) != sd.r) return false;
  int wi = W.inverse(a.w);
  for (const auto& [p, e] : sd.eps) {
    int img = W.act_root(wi, d.simple_root(p));
    int q = -1;
    for (int j = 0; j < d.semisimple_rank(); ++j)
      if (d.simple_root(j) == img) q = j;
    if (q < 0 || !sd.eps.count(q)) throw std::logic_error("arrow does not preserve P");
    if (sd.eps.at(q) != e) return false;
  }
  return true;
}

// ---------------------------------------------------------------- modules

namespace {

using QMat = std::vector<QPower>;

QMat qmat_mul(const QMat& a, const QMat& b, int n) {
  QMat r(n * n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i * n + k].is_zero()) continue;
      for (int j = 0; j < n; ++j)
        if (!b[k * n + j].is_zero()) r[i * n + j] += a[i * n + k] * b[k * n + j];
    }
  return r;
}

QMat qmat_identity(int n) {
  QMat r(n * n);
  for (int i = 0; i < n; ++i) r[i * n + i] = QPower(1);
  return r;
}

bool qmat_equal(const QMat& a, const QMat& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

// u = u' v with u' in W^P and v in W_P; returns (u', product of eps over v).
std::pair<int, QPower> split_coset(const WeylGroup& W, const SpectralDatum& sd, int u) {
  QPower c(1);
  for (bool moved = true; moved;) {
    moved = false;
    for (const auto& [k, e] : sd.eps) {
      int us = W.mul(u, W.simple_reflection(k));
      if (W.length(us) < W.length(u)) {
        u = us;
        c *= e;
        moved = true;
        break;
      }
    }
  }
  return {u, c};
}

}  // namespace

std::vector<QPower> module_theta(const HeckeAlgebra& H, const ParabolicData& pd, const SpectralDatum& sd,
                                 const TorusPoint& t, const std::vector<int>& basis, const Theta& x) {
  const WeylGroup& W = H.weyl();
  const int n = (int)basis.size();
  std::map<int, int> pos;
  for (int i = 0; i < n; ++i) pos[basis[i]] = i;
  TorusPoint weight = sd.r * t;
  QMat m(n * n);
  for (int c = 0; c < n; ++c) {
    const NThetaElement& e = H.theta_times_N(x, basis[c]);
    for (const auto& [uy, coef] : e) {
      auto [u, sign] = split_coset(W, sd, uy.first);
      auto it = pos.find(u);
      if (it == pos.end()) throw std::logic_error("coset representative missing from module basis");
      m[it->second * n + c] += coef * sign * weight.value(uy.second, H.mode());
    }
  }
  (void)pd;
  return m;
}

HeckeModule induced_module(const HeckeAlgebra& H, const ParabolicData& pd, const SpectralDatum& sd,
                           const TorusPoint& t) {
  if (!sd.realized()) throw std::invalid_argument("induced module needs a one-dimensional realization");
  if (!pd.in_upper_torus(t)) throw std::invalid_argument("t does not lie in T^P");
  const WeylGroup& W = H.weyl();
  const RootDatum& d = H.datum();
  HeckeModule m;
  m.basis = W.coset_reps(pd.P);
  const int n = m.dim();
  std::map<int, int> pos;
  for (int i = 0; i < n; ++i) pos[m.basis[i]] = i;
  for (int k = 0; k < d.semisimple_rank(); ++k) {
    QMat M(n * n);
    int s = W.simple_reflection(k);
    QPower a = H.params().sqrt_difference(H.params().qs_exp(d.simple_root(k)));
    for (int c = 0; c < n; ++c) {
      int w = m.basis[c];
      int u = W.mul(s, w);
      auto it = pos.find(u);
      if (it != pos.end()) {
        M[it->second * n + c] += QPower(1);
        if (W.length(u) < W.length(w)) M[c * n + c] += a;
      } else {
        // s w = w s' with s' simple in P.
        int img = W.act_root(W.inverse(w), d.simple_root(k));
        int q = -1;
        for (int p : pd.P)
          if (d.simple_root(p) == img) q = p;
        if (q < 0) throw std::logic_error("coset decomposition failed");
        M[c * n + c] += sd.eps.at(q);
      }
    }
    m.N.push_back(std::move(M));
  }
  for (int j = 0; j < d.rank(); ++j) {
    Theta e(d.rank(), 0);
    e[j] = 1;
    m.theta.push_back(module_theta(H, pd, sd, t, m.basis, e));
    e[j] = -1;
    m.theta_inv.push_back(module_theta(H, pd, sd, t, m.basis, e));
  }
  return m;
}

ModuleChecks check_module(const HeckeAlgebra& H, const ParabolicData& pd, const SpectralDatum& sd,
                          const TorusPoint& t, const HeckeModule& m) {
  const RootDatum& d = H.datum();
  const WeylGroup& W = H.weyl();
  const int n = m.dim();
  ModuleChecks r;
  QMat I = qmat_identity(n);
  for (int k = 0; k < d.semisimple_rank(); ++k) {
    QPower a = H.params().sqrt_difference(H.params().qs_exp(d.simple_root(k)));
    QMat rhs = I;
    for (int i = 0; i < n * n; ++i) rhs[i] += a * m.N[k][i];
    if (!qmat_equal(qmat_mul(m.N[k], m.N[k], n), rhs)) r.quadratic = false;
  }
  for (int k = 0; k < d.semisimple_rank(); ++k)
    for (int l = k + 1; l < d.semisimple_rank(); ++l) {
      std::int64_t p = dot(d.root(d.simple_root(k)), d.coroot(d.simple_root(l))) *
                       dot(d.root(d.simple_root(l)), d.coroot(d.simple_root(k)));
      int mkl = p == 0 ? 2 : p == 1 ? 3 : p == 2 ? 4 : 6;
      QMat x = I, y = I;
      for (int i = 0; i < mkl; ++i) {
        x = qmat_mul(x, m.N[i % 2 ? l : k], n);
        y = qmat_mul(y, m.N[i % 2 ? k : l], n);
      }
      if (!qmat_equal(x, y)) r.braid = false;
    }
  for (int i = 0; i < d.rank(); ++i) {
    if (!qmat_equal(qmat_mul(m.theta[i], m.theta_inv[i], n), I)) r.theta_commute = false;
    for (int j = 0; j < d.rank(); ++j)
      if (!qmat_equal(qmat_mul(m.theta[i], m.theta[j], n), qmat_mul(m.theta[j], m.theta[i], n)))
        r.theta_commute = false;
  }
  // Cross relation and central elements on small test weights.
  std::vector<Theta> tests;
  for (int j = 0; j < d.rank(); ++j) {
    Theta e(d.rank(), 0);
    e[j] = 1;
    tests.push_back(e);
    e[j] = -2;
    tests.push_back(e);
  }
  for (int k = 0; k < d.semisimple_rank() && !tests.empty(); ++k) {
    Theta mix(d.rank(), 0);
    for (int j = 0; j < d.rank(); ++j) mix[j] = (j + k) % 3 - 1;
    tests.push_back(mix);
  }
  TorusPoint weight = sd.r * t;
  for (const auto& x : tests) {
    QMat tx = module_theta(H, pd, sd, t, m.basis, x);
    for (int k = 0; k < d.semisimple_rank(); ++k) {
      const int ai = d.simple_root(k);
      Theta sx = x;
      std::int64_t c = dot(x, d.coroot(ai));
      for (int j = 0; j < d.rank(); ++j) sx[j] -= c * d.root(ai)[j];
      QMat tsx = module_theta(H, pd, sd, t, m.basis, sx);
      QMat lhs = qmat_mul(tx, m.N[k], n), sub = qmat_mul(m.N[k], tsx, n);
      for (int i = 0; i < n * n; ++i) lhs[i] -= sub[i];
      QMat rhs(n * n);
      for (const auto& [y, e] : H.cross_term(k, x)) {
        QMat ty = module_theta(H, pd, sd, t, m.basis, y);
        for (int i = 0; i < n * n; ++i) rhs[i] += e * ty[i];
      }
      if (!qmat_equal(lhs, rhs)) r.cross = false;
    }
    QMat z(n * n);
    QPower scalar;
    std::set<int> dummy;
    for (int w = 0; w < W.order(); ++w) {
      Theta wx = W.act(w, x);
      QMat tw = module_theta(H, pd, sd, t, m.basis, wx);
      for (int i = 0; i < n * n; ++i) z[i] += tw[i];
      scalar += weight.value(wx, H.mode());
    }
    QMat expect(n * n);
    for (int i = 0; i < n; ++i) expect[i * n + i] = scalar;
    if (!qmat_equal(z, expect)) r.center = false;
  }
  return r;
}

int commutant_dim(const HeckeAlgebra& H, const HeckeModule& m) {
  if (H.mode().generic()) throw std::invalid_argument("commutant_dim needs numeric v");
  const int n = m.dim();
  std::vector<std::vector<Cyclotomic>> gens;
  auto conv = [&](const QMat& q) {
    std::vector<Cyclotomic> c(q.size());
    for (size_t i = 0; i < q.size(); ++i) c[i] = q[i].constant();
    return c;
  };
  for (const auto& M : m.N) gens.push_back(conv(M));
  for (const auto& M : m.theta) gens.push_back(conv(M));
  // Echelon rows keyed by leading column, each normalized to leading 1.
  std::map<int, std::map<int, Cyclotomic>> piv;
  const int target = n * n - 1;
  auto insert = [&](std::map<int, Cyclotomic> row) {
    while (!row.empty()) {
      auto lead = row.begin();
      auto p = piv.find(lead->first);
      if (p == piv.end()) {
        Cyclotomic inv = lead->second.inverse();
        for (auto& [c, v] : row) v *= inv;
        piv.emplace(lead->first, std::move(row));
        return;
      }
      Cyclotomic f = lead->second;
      for (const auto& [c, v] : p->second) {
        auto it = row.find(c);
        Cyclotomic nv = (it == row.end() ? Cyclotomic(0) : it->second) - f * v;
        if (nv.is_zero()) {
          if (it != row.end()) row.erase(it);
        } else if (it == row.end()) {
          row.emplace(c, nv);
        } else {
          it->second = nv;
        }
      }
    }
  };
  for (const auto& M : gens) {
    for (int i = 0; i < n && (int)piv.size() < target; ++i)
      for (int j = 0; j < n && (int)piv.size() < target; ++j) {
        // (A M - M A)_{ij} = sum_l A_{il} M_{lj} - M_{il} A_{lj}
        std::map<int, Cyclotomic> row;
        for (int l = 0; l < n; ++l) {
          if (!M[l * n + j].is_zero()) row[i * n + l] += M[l * n + j];
          if (!M[i * n + l].is_zero()) row[l * n + j] -= M[i * n + l];
        }
        for (auto it = row.begin(); it != row.end();)
          it = it->second.is_zero() ? row.erase(it) : std::next(it);
        insert(std::move(row));
      }
  }
  return n * n - (int)piv.size();
}

}  // namespace ahrg
