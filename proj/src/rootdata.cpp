#include "ahrg/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace ahrg {

IntMat cartan_matrix(char family, int n) {
  if (n < 1) throw std::invalid_argument("Cartan type rank must be positive");
  IntMat A(n, n);
  for (int i = 0; i < n; ++i) A(i, i) = 2;
  auto bond = [&](int i, int j, int aij = -1, int aji = -1) {  // 1-based
    A(i - 1, j - 1) = aij;
    A(j - 1, i - 1) = aji;
  };
  switch (family) {
    case 'A':
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      break;
    case 'B':
      if (n < 2) throw std::invalid_argument("B_n needs n >= 2");
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
      bond(n - 1, n, -2, -1);  // alpha_n short
      break;
    case 'C':
      if (n < 2) throw std::invalid_argument("C_n needs n >= 2");
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
      bond(n - 1, n, -1, -2);  // alpha_n long
      break;
    case 'D':
      if (n < 3) throw std::invalid_argument("D_n needs n >= 3");
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
      bond(n - 1, n, 0, 0);
      bond(n - 2, n);
      break;
    case 'E':
      if (n < 6 || n > 8) throw std::invalid_argument("E_n needs 6 <= n <= 8");
      bond(1, 3), bond(3, 4), bond(4, 5), bond(2, 4);
      for (int i = 5; i < n; ++i) bond(i, i + 1);
      break;
    case 'F':
      if (n != 4) throw std::invalid_argument("F_n needs n = 4");
      bond(1, 2), bond(2, 3, -2, -1), bond(3, 4);
      break;
    case 'G':
      if (n != 2) throw std::invalid_argument("G_n needs n = 2");
      bond(1, 2, -1, -3);  // alpha_1 short
      break;
    default:
      throw std::invalid_argument(std::string("unknown Cartan family ") + family);
  }
  return A;
}

namespace {

struct Component {
  char family;
  int n;  // rank; for torus factors the torus dimension
};

std::vector<Component> parse_type(const std::string& label) {
  std::vector<Component> out;
  std::stringstream ss(label);
  std::string tok;
  while (std::getline(ss, tok, 'x')) {
    if (tok.size() < 2) throw std::invalid_argument("bad Cartan type token '" + tok + "'");
    char f = tok[0];
    int n = 0;
    try {
      size_t used = 0;
      n = std::stoi(tok.substr(1), &used);
      if (used + 1 != tok.size()) throw std::invalid_argument("");
    } catch (...) {
      throw std::invalid_argument("bad Cartan type token '" + tok + "'");
    }
    if (f != 'T') cartan_matrix(f, n);  // validates
    else if (n < 1) throw std::invalid_argument("torus factor needs positive rank");
    out.push_back({f, n});
  }
  if (out.empty()) throw std::invalid_argument("empty Cartan type");
  return out;
}

}  // namespace

RootDatum RootDatum::build(const CartanSpec& spec) {
  auto comps = parse_type(spec.type);
  int ss = 0, n = 0;
  for (auto& c : comps) {
    n += c.n;
    if (c.family != 'T') ss += c.n;
  }
  // Block-diagonal Cartan matrix over the semisimple coordinates and
  // per-simple squared lengths (shortest = 2 per component).
  IntMat A(ss, ss);
  std::vector<Rational> len(ss);
  std::vector<int> comp(ss);
  std::vector<std::string> names;
  std::vector<int> ss_coord;  // omega coordinate index of simple i
  std::vector<int> torus_coord;
  {
    int off = 0, pos = 0, ci = 0;
    for (auto& c : comps) {
      if (c.family == 'T') {
        for (int k = 0; k < c.n; ++k) torus_coord.push_back(pos++);
        ++ci;
        continue;
      }
      IntMat a = cartan_matrix(c.family, c.n);
      for (int i = 0; i < c.n; ++i)
        for (int j = 0; j < c.n; ++j) A(off + i, off + j) = a(i, j);
      // len_j * A_ij = len_i * A_ji along edges.
      std::vector<Rational> l(c.n, 0);
      l[0] = 1;
      for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < c.n; ++i)
          for (int j = 0; j < c.n; ++j)
            if (i != j && a(i, j) != 0 && l[i] != 0 && l[j] == 0) {
              l[j] = l[i] * a(j, i) / a(i, j);
              changed = true;
            }
      }
      Rational mn = *std::min_element(l.begin(), l.end());
      for (int i = 0; i < c.n; ++i) {
        len[off + i] = 2 * l[i] / mn;
        comp[off + i] = ci;
        ss_coord.push_back(pos++);
      }
      off += c.n;
      ++ci;
    }
  }
  for (int i = 0; i < ss; ++i) names.push_back("a" + std::to_string(i + 1));

  // Basis of X in omega coordinates (semisimple coords first in ss_coord order).
  IntMat B(n, n);
  if (spec.lattice == "sc") {
    B = IntMat::identity(n);
  } else if (spec.lattice == "adjoint") {
    for (int i = 0; i < ss; ++i)
      for (int j = 0; j < ss; ++j) B(ss_coord[i], ss_coord[j]) = A(i, j);
    for (int t : torus_coord) B(t, t) = 1;
  } else if (spec.lattice == "explicit") {
    if ((int)spec.basis.size() != n) throw std::invalid_argument("explicit lattice basis needs rank rows");
    B = IntMat::from_rows(spec.basis, n);
  } else {
    throw std::invalid_argument("unknown lattice choice '" + spec.lattice + "'");
  }
  if (determinant(B) == 0) throw std::invalid_argument("lattice basis is singular");
  auto Binv = rational_inverse(B);

  RootDatum d;
  d.rank_ = n;
  d.label_ = spec.type + ":" + spec.lattice;
  d.names_ = names;

  // Simple roots in X coordinates: x = lambda B^{-1}; simple coroots in Y: column of B.
  std::vector<IntVec> sx(ss, IntVec(n)), sy(ss, IntVec(n));
  for (int i = 0; i < ss; ++i) {
    RatVec lam(n);
    for (int j = 0; j < ss; ++j) lam[ss_coord[j]] = A(i, j);
    for (int k = 0; k < n; ++k) {
      Rational x = 0;
      for (int j = 0; j < n; ++j) x += lam[j] * Binv[j][k];
      if (!is_integer(x)) throw std::invalid_argument("lattice does not contain the root lattice");
      sx[i][k] = x.get_num().get_si();
      sy[i][k] = B(k, ss_coord[i]);
    }
  }
  // Reflection closure on (root, coroot, coefficients).
  std::map<IntVec, std::pair<IntVec, IntVec>> found;
  std::deque<IntVec> queue;
  for (int i = 0; i < ss; ++i) {
    IntVec c(ss, 0);
    c[i] = 1;
    found[sx[i]] = {sy[i], c};
    queue.push_back(sx[i]);
  }
  while (!queue.empty()) {
    IntVec x = queue.front();
    queue.pop_front();
    auto [y, c] = found[x];
    for (int j = 0; j < ss; ++j) {
      std::int64_t k = dot(x, sy[j]), l = dot(sx[j], y);
      IntVec x2 = x, y2 = y, c2 = c;
      for (int m = 0; m < n; ++m) x2[m] -= k * sx[j][m], y2[m] -= l * sy[j][m];
      c2[j] -= k;
      if (!found.count(x2)) {
        found[x2] = {y2, c2};
        queue.push_back(x2);
      }
      if (found.size() > 100000) throw std::runtime_error("root enumeration exceeded bound");
    }
  }
  struct R {
    IntVec x, y, c;
    std::int64_t h;
  };
  std::vector<R> pos;
  for (auto& [x, yc] : found) {
    std::int64_t h = 0;
    bool positive = true;
    for (auto v : yc.second) h += v, positive = positive && v >= 0;
    if (positive) pos.push_back({x, yc.first, yc.second, h});
  }
  std::sort(pos.begin(), pos.end(), [](const R& a, const R& b) {
    if (a.h != b.h) return a.h < b.h;
    return a.c > b.c;
  });
  for (auto& r : pos) {
    d.roots_.push_back(r.x);
    d.coroots_.push_back(r.y);
    d.coeffs_.push_back(r.c);
  }
  for (auto& r : pos) {
    IntVec x = r.x, y = r.y, c = r.c;
    for (auto& v : x) v = -v;
    for (auto& v : y) v = -v;
    for (auto& v : c) v = -v;
    d.roots_.push_back(x);
    d.coroots_.push_back(y);
    d.coeffs_.push_back(c);
  }
  if (d.roots_.size() != found.size()) throw std::logic_error("root system is not symmetric");
  for (int i = 0; i < d.nroots(); ++i) d.index_[d.roots_[i]] = i;
  for (int i = 0; i < ss; ++i) {
    d.simple_.push_back(d.index_.at(sx[i]));
    d.comp_.push_back(comp[i]);
  }

  // Form on omega coordinates: A^{-1} S A^{-T} on the semisimple block, identity on torus.
  RatMat Gw(n, n);
  if (ss > 0) {
    RatMat Ar(ss, ss), S(ss, ss);
    for (int i = 0; i < ss; ++i)
      for (int j = 0; j < ss; ++j) {
        Ar(i, j) = A(i, j);
        S(i, j) = A(i, j) * len[j] / 2;
      }
    for (int i = 0; i < ss; ++i)
      for (int j = 0; j < ss; ++j)
        if (S(i, j) != S(j, i)) throw std::logic_error("symmetrized Cartan matrix is not symmetric");
    RatMat Ai = Ar.inverse();
    RatMat AiT(ss, ss);
    for (int i = 0; i < ss; ++i)
      for (int j = 0; j < ss; ++j) AiT(i, j) = Ai(j, i);
    RatMat G = Ai * S * AiT;
    for (int i = 0; i < ss; ++i)
      for (int j = 0; j < ss; ++j) Gw(ss_coord[i], ss_coord[j]) = G(i, j);
  }
  for (int t : torus_coord) Gw(t, t) = 1;
  RatMat Br(n, n), BrT(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) Br(i, j) = B(i, j), BrT(j, i) = B(i, j);
  d.gx_ = Br * Gw * BrT;
  d.gy_ = d.gx_.inverse();
  d.validate();
  return d;
}

int RootDatum::find_root(const IntVec& x) const {
  auto it = index_.find(x);
  return it == index_.end() ? -1 : it->second;
}

Rational RootDatum::norm2_Y(const RatVec& y) const {
  Rational s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) s += y[i] * gy_(i, j) * y[j];
  return s;
}

bool RootDatum::coroot_in_2Y(int i) const {
  for (auto v : coroots_[i])
    if (v % 2) return false;
  return true;
}

std::vector<IntVec> RootDatum::nonreduced_roots() const {
  std::vector<IntVec> out = roots_;
  for (int i = 0; i < nroots(); ++i)
    if (coroot_in_2Y(i)) {
      IntVec x = roots_[i];
      for (auto& v : x) v *= 2;
      out.push_back(x);
    }
  return out;
}

std::vector<IntVec> RootDatum::reduced_one() const {
  // R_1: elements of R_nr whose coroot is not in 2Y. For 2 alpha the coroot is
  // alpha^vee / 2.
  std::vector<IntVec> out;
  for (int i = 0; i < nroots(); ++i) {
    if (!coroot_in_2Y(i)) {
      out.push_back(roots_[i]);
      continue;
    }
    IntVec half = coroots_[i];
    bool odd = false;
    for (auto& v : half) v /= 2, odd = odd || (v % 2 != 0);
    if (odd) {
      IntVec x = roots_[i];
      for (auto& v : x) v *= 2;
      out.push_back(x);
    }
  }
  return out;
}

IntMat RootDatum::reflection_X(int i) const {
  IntMat R = IntMat::identity(rank_);
  for (int r = 0; r < rank_; ++r)
    for (int c = 0; c < rank_; ++c) R(r, c) -= roots_[i][r] * coroots_[i][c];
  return R;
}

IntMat RootDatum::reflection_Y(int i) const {
  IntMat R = IntMat::identity(rank_);
  for (int r = 0; r < rank_; ++r)
    for (int c = 0; c < rank_; ++c) R(r, c) -= coroots_[i][r] * roots_[i][c];
  return R;
}

void RootDatum::validate() const {
  for (int i = 0; i < nroots(); ++i) {
    if (dot(roots_[i], coroots_[i]) != 2) throw std::logic_error("<alpha, alpha^vee> != 2");
    IntMat sx = reflection_X(i), sy = reflection_Y(i);
    for (int j = 0; j < nroots(); ++j) {
      if (find_root(sx * roots_[j]) < 0) throw std::logic_error("reflection does not stabilize R_0");
      int k = find_root(sx * roots_[j]);
      if (coroots_[k] != sy * coroots_[j]) throw std::logic_error("reflection does not stabilize R_0^vee");
    }
    RatMat S(rank_, rank_), St(rank_, rank_);
    for (int r = 0; r < rank_; ++r)
      for (int c = 0; c < rank_; ++c) S(r, c) = sx(r, c), St(c, r) = sx(r, c);
    if (St * gx_ * S != gx_) throw std::logic_error("inner product not W_0-invariant");
  }
  for (int i = 0; i < nroots(); ++i) {
    bool nonneg = true, nonpos = true;
    for (auto v : coeffs_[i]) nonneg = nonneg && v >= 0, nonpos = nonpos && v <= 0;
    if (!nonneg && !nonpos) throw std::logic_error("F_0 is not a basis");
    IntVec sum(rank_, 0);
    for (int k = 0; k < semisimple_rank(); ++k)
      for (int m = 0; m < rank_; ++m) sum[m] += coeffs_[i][k] * roots_[simple_[k]][m];
    if (sum != roots_[i]) throw std::logic_error("root coefficients inconsistent");
  }
  for (int k = 0; k < semisimple_rank(); ++k) {
    const IntVec& a = roots_[simple_[k]];
    Rational n2 = 0;
    for (int r = 0; r < rank_; ++r)
      for (int c = 0; c < rank_; ++c) n2 += a[r] * gx_(r, c) * a[c];
    if (n2 < 2) throw std::logic_error("root shorter than normalization");
  }
}

IntVec ParabolicData::to_upper(const IntVec& x) const {
  IntVec c = upper_coords * x;
  return IntVec(c.begin() + span_basis.cols, c.end());
}

IntVec ParabolicData::to_lower(const IntVec& x) const {
  IntVec c = lower_coords * x;
  return IntVec(c.begin() + perp_basis.cols, c.end());
}

bool ParabolicData::in_upper_torus(const TorusPoint& t) const {
  for (int j = 0; j < span_basis.cols; ++j) {
    PhaseMonomial m = t.eval(span_basis.col(j));
    if (m.turn != 0 || m.vexp != 0) return false;
  }
  return true;
}

bool ParabolicData::in_lower_torus(const TorusPoint& t) const {
  for (int j = 0; j < perp_basis.cols; ++j) {
    PhaseMonomial m = t.eval(perp_basis.col(j));
    if (m.turn != 0 || m.vexp != 0) return false;
  }
  return true;
}

ParabolicData parabolic_data(const RootDatum& d, const std::vector<int>& P) {
  ParabolicData pd;
  pd.P = P;
  std::sort(pd.P.begin(), pd.P.end());
  pd.P.erase(std::unique(pd.P.begin(), pd.P.end()), pd.P.end());
  std::set<int> pset(pd.P.begin(), pd.P.end());
  for (int p : pd.P)
    if (p < 0 || p >= d.semisimple_rank()) throw std::invalid_argument("P is not a subset of F_0");
  for (int i = 0; i < d.nroots(); ++i) {
    bool in = true;
    for (int k = 0; k < d.semisimple_rank(); ++k)
      if (d.root_coeffs(i)[k] != 0 && !pset.count(k)) in = false;
    if (in) pd.roots.push_back(i);
  }
  const int n = d.rank();
  std::vector<IntVec> cols, corows;
  for (int p : pd.P) {
    cols.push_back(d.root(d.simple_root(p)));
    corows.push_back(d.coroot(d.simple_root(p)));
  }
  pd.span_basis = saturation(IntMat::from_cols(cols, n));
  pd.perp_basis = integer_kernel(IntMat::from_rows(corows, n));
  pd.upper_coords = unimodular_inverse(extend_to_unimodular(pd.span_basis));
  pd.lower_coords = unimodular_inverse(extend_to_unimodular(pd.perp_basis));
  return pd;
}

std::vector<MinimalParabolic> minimal_parabolics_containing(const RootDatum& d, const ParabolicData& pd) {
  std::vector<MinimalParabolic> out;
  std::set<std::vector<int>> seen;
  std::set<int> rp(pd.roots.begin(), pd.roots.end());
  const int n = d.rank();
  auto span_rank = [&](const std::vector<int>& idx) {
    RatMat m((int)idx.size(), n);
    for (size_t i = 0; i < idx.size(); ++i)
      for (int j = 0; j < n; ++j) m((int)i, j) = d.root(idx[i])[j];
    return m.rank();
  };
  std::vector<int> pidx;
  for (int p : pd.P) pidx.push_back(d.simple_root(p));
  for (int b = 0; b < d.npos(); ++b) {
    if (rp.count(b)) continue;
    std::vector<int> gen = pidx;
    gen.push_back(b);
    int r0 = span_rank(gen);
    std::vector<int> rq;
    for (int g = 0; g < d.nroots(); ++g) {
      std::vector<int> t = gen;
      t.push_back(g);
      if (span_rank(t) == r0) rq.push_back(g);
    }
    if (!seen.insert(rq).second) continue;
    MinimalParabolic mp;
    mp.roots = rq;
    std::set<IntVec> posq;
    for (int g : rq)
      if (d.is_positive(g)) posq.insert(d.root(g));
    for (int g : rq) {
      if (!d.is_positive(g)) continue;
      bool decomposable = false;
      for (const auto& a : posq) {
        IntVec rest = d.root(g);
        for (int j = 0; j < n; ++j) rest[j] -= a[j];
        if (posq.count(rest)) { decomposable = true; break; }
      }
      if (!decomposable) mp.basis.push_back(g);
    }
    for (int g : mp.basis)
      if (!rp.count(g)) {
        if (mp.alpha_Q >= 0) throw std::logic_error("minimal parabolic has two new simple roots");
        mp.alpha_Q = g;
      }
    if (mp.alpha_Q < 0 || mp.basis.size() != pd.P.size() + 1)
      throw std::logic_error("minimal parabolic basis has unexpected size");
    IntVec aq = pd.to_upper(d.root(mp.alpha_Q));
    int nz = -1;
    for (size_t j = 0; j < aq.size(); ++j)
      if (aq[j]) { nz = (int)j; break; }
    for (int g : rq) {
      IntVec ag = pd.to_upper(d.root(g));
      Rational m = nz < 0 ? Rational(0) : ratio(ag[nz], aq[nz]);
      m.canonicalize();
      for (size_t j = 0; j < aq.size(); ++j)
        if (Rational(ag[j]) != m * aq[j]) throw std::logic_error("restriction is not a multiple of alpha_Q^P");
      if (!is_integer(m)) throw std::logic_error("restriction multiplicity is not integral");
      mp.multiplicity[g] = m;
    }
    out.push_back(std::move(mp));
  }
  return out;
}

DatumPosition classify_position(const RootDatum& d, const std::vector<int>& P, const TorusPoint& t) {
  if (t.is_unitary()) return DatumPosition::unitary;
  std::set<int> pset(P.begin(), P.end());
  for (int k = 0; k < d.semisimple_rank(); ++k) {
    if (pset.count(k)) continue;
    if (t.eval(d.root(d.simple_root(k))).vexp < 0) return DatumPosition::general;
  }
  return DatumPosition::positive;
}

const char* to_string(DatumPosition p) {
  switch (p) {
    case DatumPosition::unitary: return "unitary";
    case DatumPosition::positive: return "positive";
    default: return "general";
  }
}

}  // namespace ahrg
