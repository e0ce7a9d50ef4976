#include "ahrg/rgroups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ahrg {

RatFun c_alpha(const Parameters& q, int alpha, const PhaseMonomial& ra, long m) {
  const Rational h = q.half_exp(alpha), F = q.full_exp(alpha);
  PhaseMonomial x = ra.inverse();  // theta_{-alpha} = x z^{-m}
  RatFun f1 = RatFun::one_plus(PhaseMonomial(0, -h / 2) * x, -m);
  RatFun f2 = RatFun::one_minus(PhaseMonomial(0, -h / 2 - F) * x, -m);
  RatFun f3 = RatFun::one_minus(x * x, -2 * m);
  return f1 * f2 / f3;
}

IntVec lift_upper(const ParabolicData& pd, const IntVec& u) {
  IntMat M = unimodular_inverse(pd.upper_coords);
  const int n = M.rows, off = pd.span_basis.cols;
  IntVec x(n, 0);
  for (size_t j = 0; j < u.size(); ++j)
    for (int i = 0; i < n; ++i) x[i] = checked_add(x[i], checked_mul(u[j], M(i, off + (int)j)));
  return x;
}

namespace {

IntVec primitive(const IntVec& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g == 0) throw std::logic_error("zero vector has no primitive direction");
  IntVec r(v);
  for (auto& x : r) x /= g;
  return r;
}

// v = j * gamma; returns j.
long multiple_of(const IntVec& v, const IntVec& gamma) {
  for (size_t i = 0; i < v.size(); ++i)
    if (gamma[i] != 0) {
      long j = (long)(v[i] / gamma[i]);
      for (size_t k = 0; k < v.size(); ++k)
        if (v[k] != j * gamma[k]) throw std::logic_error("restricted root is not a multiple of gamma");
      return j;
    }
  throw std::logic_error("gamma is zero");
}

RatFun coset_product(const RootDatum& d, const Parameters& q, const ParabolicData& pd, const TorusPoint& r,
                     const MinimalParabolic& Q, const IntVec& gamma, RatFun* den) {
  std::set<int> rp(pd.roots.begin(), pd.roots.end());
  RatFun c, dd;
  for (int a : Q.roots) {
    if (!d.is_positive(a) || rp.count(a)) continue;
    long m = multiple_of(pd.to_upper(d.root(a)), gamma);
    RatFun f = c_alpha(q, a, r.eval(d.root(a)), m);
    c = c * f;
    RatFun part;
    for (const auto& [rho, mult] : f.roots())
      if (mult < 0) part = part * RatFun::one_minus(rho.inverse(), 1);
    dd = dd * part;
  }
  if (den) *den = dd;
  return c;
}

}  // namespace

CosetFunction cQP_on_coset(const WeylGroup& W, const Parameters& q, const ParabolicData& pd,
                           const SpectralDatum& delta, const MinimalParabolic& Q) {
  const RootDatum& d = W.datum();
  if (!pd.in_lower_torus(delta.r)) throw std::invalid_argument("central character of delta does not lie in T_P");
  CosetFunction out;
  out.Q = Q;
  out.gamma = primitive(pd.to_upper(d.root(Q.alpha_Q)));
  RatFun den;
  out.c = coset_product(d, q, pd, delta.r, Q, out.gamma, &den);
  // Independence of the representative in W(R_P) r_delta.
  for (int w : W.parabolic_subgroup(pd.P)) {
    if (w == 0) continue;
    RatFun cw = coset_product(d, q, pd, W.act(w, delta.r), Q, out.gamma, nullptr);
    if (!(cw == out.c)) throw std::invalid_argument("c_Q^P depends on the representative of W(R_P) r_delta");
  }
  for (const auto& [rho, mult] : den.roots())
    if (mult > 0 && rho.is_unitary() && out.c.pole_order(rho) <= 0) out.cancelled.push_back(rho);
  return out;
}

bool Mirror::contains(const ParabolicData& pd, const TorusPoint& t) const {
  return t.eval(lift_upper(pd, gamma)) == z0;
}

MirrorSet mirrors(const WeylGroup& W, const Parameters& q, const ParabolicData& pd, const SpectralDatum& delta) {
  const RootDatum& d = W.datum();
  MirrorSet out;
  auto mins = minimal_parabolics_containing(d, pd);
  for (size_t i = 0; i < mins.size(); ++i) {
    CosetFunction cf = cQP_on_coset(W, q, pd, delta, mins[i]);
    for (const auto& [z0, order] : cf.c.unitary_poles()) {
      if (order < 1) continue;
      Mirror M;
      M.q_index = (int)i;
      M.alpha_Q = mins[i].alpha_Q;
      M.gamma = cf.gamma;
      M.z0 = z0;
      M.order = order;
      out.mirrors.push_back(M);
    }
    for (const auto& z : cf.cancelled)
      out.flags.push_back("denominator zero cancelled completely at z = " + z.str() + " for alpha_Q = root " +
                          std::to_string(mins[i].alpha_Q));
    out.functions.push_back(std::move(cf));
  }
  return out;
}

RatMat arrow_linear_part(const Groupoid& G, const Arrow& a) {
  IntMat L = G.upper_action(a.w);
  RatMat r(L.rows, L.cols);
  for (int i = 0; i < L.rows; ++i)
    for (int j = 0; j < L.cols; ++j) r(i, j) = L(i, j);
  return r;
}

Arrow reflection_for_mirror(const Groupoid& G, const SpectralDatum& delta, const Mirror& M) {
  const ParabolicData& pd = G.parabolic();
  const int r = pd.upper_rank();
  std::vector<Arrow> found;
  for (const auto& a : G.self_arrows()) {
    IntMat L = G.upper_action(a.w);
    IntVec neg(M.gamma);
    for (auto& x : neg) x = -x;
    if (L * M.gamma != neg) continue;
    if (!(L * L).is_identity()) continue;
    // L e_j = e_j - l_j gamma, and k(L e_j) z0^{-l_j} = 1.
    bool ok = true;
    const TorusPoint& k = G.K().elements[a.k];
    for (int j = 0; j < r && ok; ++j) {
      IntVec e(r, 0);
      e[j] = 1;
      IntVec diff = L * e;
      for (int i = 0; i < r; ++i) diff[i] = e[i] - diff[i];
      long l = 0;
      bool zero = std::all_of(diff.begin(), diff.end(), [](std::int64_t x) { return x == 0; });
      if (!zero) {
        try {
          l = multiple_of(diff, M.gamma);
        } catch (const std::logic_error&) {
          ok = false;
          break;
        }
      }
      PhaseMonomial val = k.eval(lift_upper(pd, L * e));
      PhaseMonomial zl(M.z0.turn * -l, M.z0.vexp * -l);
      if (!(val * zl == PhaseMonomial(0, 0))) ok = false;
    }
    if (!ok) continue;
    if (!delta_invariant(G, delta, a)) continue;
    found.push_back(a);
  }
  if (found.empty()) throw std::runtime_error("no delta-invariant arrow reflects the mirror");
  if (found.size() > 1) throw std::runtime_error("several arrows reflect the same mirror");
  return found[0];
}

namespace {

bool same_arrow(const Arrow& a, const Arrow& b) { return a.w == b.w && a.k == b.k; }

int index_of(const std::vector<Arrow>& v, const Arrow& a) {
  for (size_t i = 0; i < v.size(); ++i)
    if (same_arrow(v[i], a)) return (int)i;
  return -1;
}

// Exact feasibility of {f : a_i . f >= 1} by Fourier-Motzkin elimination.
bool feasible(std::vector<std::pair<RatVec, Rational>> rows, int dim) {
  for (int v = 0; v < dim; ++v) {
    std::vector<std::pair<RatVec, Rational>> pos, neg, rest;
    for (auto& row : rows) {
      if (row.first[v] > 0) pos.push_back(row);
      else if (row.first[v] < 0) neg.push_back(row);
      else rest.push_back(row);
    }
    for (auto& p : pos)
      for (auto& n : neg) {
        Rational cp = p.first[v], cn = -n.first[v];
        RatVec a(dim);
        for (int i = 0; i < dim; ++i) a[i] = p.first[i] * cn + n.first[i] * cp;
        rest.push_back({a, p.second * cn + n.second * cp});
      }
    rows = std::move(rest);
    // Drop duplicate rows to curb growth.
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  }
  for (auto& row : rows)
    if (row.second > 0) return false;
  return true;
}

long count_positive_systems(const std::vector<IntVec>& pos, int dim) {
  const int m = (int)pos.size();
  long count = 0;
  for (long mask = 0; mask < (1L << m); ++mask) {
    std::vector<std::pair<RatVec, Rational>> rows;
    for (int i = 0; i < m; ++i) {
      RatVec a(dim);
      for (int j = 0; j < dim; ++j) a[j] = ((mask >> i) & 1) ? -pos[i][j] : pos[i][j];
      rows.push_back({a, 1});
    }
    if (feasible(rows, dim)) ++count;
  }
  return count;
}

constexpr int kMaxTransitivityRoots = 10;

void finish(const Groupoid& G, RGroupData& R) {
  const ParabolicData& pd = G.parabolic();
  const int r = pd.upper_rank();
  for (size_t i = 0; i < R.mirrors_xi.size(); ++i) {
    Arrow s = reflection_for_mirror(G, R.xi.delta, R.mirrors_xi[i]);
    if (index_of(R.stabilizer, s) < 0) R.flags.push_back("mirror reflection does not stabilize xi");
    R.reflections.push_back(s);
    R.roots_pos.push_back(R.mirrors_xi[i].gamma);
  }
  std::set<IntVec> posset(R.roots_pos.begin(), R.roots_pos.end());
  auto preserves = [&](const Arrow& a) {
    IntMat L = G.upper_action(a.w);
    std::set<IntVec> img;
    for (const auto& g : R.roots_pos) img.insert(L * g);
    return img == posset;
  };
  // W(R_xi) as the closure of the mirror reflections.
  R.weyl_R = {Arrow{0, 0}};
  std::deque<Arrow> queue{Arrow{0, 0}};
  while (!queue.empty()) {
    Arrow a = queue.front();
    queue.pop_front();
    for (const auto& s : R.reflections) {
      Arrow b = G.compose(a, s);
      if (index_of(R.weyl_R, b) < 0) {
        R.weyl_R.push_back(b);
        queue.push_back(b);
      }
    }
  }
  for (const auto& a : R.stabilizer)
    if (preserves(a)) R.rgroup.push_back(a);
  bool inside = true;
  for (const auto& u : R.weyl_R)
    if (index_of(R.stabilizer, u) < 0) inside = false;
  // Unique factorization a = r o u.
  R.unique_factorization = inside;
  R.factor.assign(R.stabilizer.size(), {-1, -1});
  for (size_t i = 0; i < R.stabilizer.size(); ++i) {
    int hits = 0;
    for (size_t x = 0; x < R.rgroup.size(); ++x)
      for (size_t y = 0; y < R.weyl_R.size(); ++y)
        if (same_arrow(G.compose(R.rgroup[x], R.weyl_R[y]), R.stabilizer[i])) {
          ++hits;
          R.factor[i] = {(int)x, (int)y};
        }
    if (hits != 1) R.unique_factorization = false;
  }
  R.normal = inside;
  for (const auto& a : R.stabilizer) {
    Arrow ai = G.inverse(a);
    for (const auto& u : R.weyl_R)
      if (index_of(R.weyl_R, G.compose(G.compose(a, u), ai)) < 0) R.normal = false;
  }
  // Root system: every s_M permutes R_xi = R^+ u -R^+.
  R.root_system = true;
  for (const auto& s : R.reflections) {
    IntMat L = G.upper_action(s.w);
    for (const auto& g : R.roots_pos) {
      IntVec h = L * g, nh(h);
      for (auto& x : nh) x = -x;
      if (!posset.count(h) && !posset.count(nh)) R.root_system = false;
    }
  }
  // Simple transitivity on positive systems.
  bool free_action = true;
  for (const auto& u : R.weyl_R)
    if (!(u.w == 0 && u.k == 0) && preserves(u)) free_action = false;
  R.simply_transitive = free_action;
  if ((int)R.roots_pos.size() <= kMaxTransitivityRoots) {
    R.transitivity_checked = true;
    long systems = count_positive_systems(R.roots_pos, r);
    if (systems != (long)R.weyl_R.size()) R.simply_transitive = false;
  } else {
    R.flags.push_back("transitivity on positive systems not enumerated (too many roots)");
  }
}

std::vector<Arrow> compatible_stabilizer(const Groupoid& G, const InductionDatum& xi) {
  return stabilizer(G, xi.t, [&](const Arrow& a) { return delta_invariant(G, xi.delta, a); });
}

void check_datum(const Groupoid& G, const InductionDatum& xi) {
  const ParabolicData& pd = G.parabolic();
  if (xi.P != pd.P) throw std::invalid_argument("induction datum and groupoid use different P");
  if (!pd.in_upper_torus(xi.t)) throw std::invalid_argument("t does not lie in T^P");
  if (!pd.in_lower_torus(xi.delta.r)) throw std::invalid_argument("central character of delta does not lie in T_P");
}

}  // namespace

RGroupData rgroup(const Groupoid& G, const Parameters& q, const InductionDatum& xi) {
  check_datum(G, xi);
  if (!xi.t.is_unitary()) throw std::invalid_argument("rgroup needs a unitary induction datum");
  RGroupData R;
  R.xi = xi;
  R.stabilizer = compatible_stabilizer(G, xi);
  MirrorSet ms = mirrors(G.weyl(), q, G.parabolic(), xi.delta);
  R.flags = ms.flags;
  for (const auto& M : ms.mirrors)
    if (M.contains(G.parabolic(), xi.t)) R.mirrors_xi.push_back(M);
  finish(G, R);
  return R;
}

RGroupData rgroup_nontempered(const Groupoid& G, const Parameters& q, const InductionDatum& xi) {
  check_datum(G, xi);
  const RootDatum& d = G.weyl().datum();
  if (classify_position(d, xi.P, xi.t) == DatumPosition::general)
    throw std::invalid_argument("rgroup_nontempered needs |t| in the closed positive cone");
  const ParabolicData& pd = G.parabolic();
  const int r = pd.upper_rank();
  RGroupData R;
  R.xi = xi;
  R.nontempered = true;
  R.stabilizer = compatible_stabilizer(G, xi);
  // Span of the images of 1 - L_a: the annihilator of the fixed directions.
  RatMat span(r, std::max<int>(1, (int)R.stabilizer.size() * r));
  int col = 0;
  for (const auto& a : R.stabilizer) {
    IntMat L = G.upper_action(a.w);
    for (int j = 0; j < r; ++j, ++col)
      for (int i = 0; i < r; ++i) span(i, col) = Rational((i == j ? 1 : 0) - L(i, j));
  }
  const int base_rank = span.rank();
  TorusPoint tu = xi.t.unitary_part();
  MirrorSet ms = mirrors(G.weyl(), q, pd, xi.delta);
  R.flags = ms.flags;
  for (const auto& M : ms.mirrors) {
    RatMat ext(r, span.cols + 1);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < span.cols; ++j) ext(i, j) = span(i, j);
      ext(i, span.cols) = M.gamma[i];
    }
    bool component = M.contains(pd, tu) && ext.rank() == base_rank;
    bool complexified = M.contains(pd, xi.t);
    if (component != complexified) R.mirror_rules_agree = false;
    if (component) R.mirrors_xi.push_back(M);
  }
  if (!R.mirror_rules_agree) R.flags.push_back("component rule and complexification rule disagree");
  finish(G, R);
  return R;
}

}  // namespace ahrg
