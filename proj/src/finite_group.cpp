#include "ahrg/finite_group.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace ahrg {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table) : table_(std::move(table)) {
  const int n = (int)table_.size();
  if (n == 0) throw std::invalid_argument("empty group table");
  for (int a = 0; a < n; ++a) {
    if ((int)table_[a].size() != n) throw std::invalid_argument("group table is not square");
    std::vector<bool> seen(n, false);
    for (int b = 0; b < n; ++b) {
      int c = table_[a][b];
      if (c < 0 || c >= n || seen[c]) throw std::invalid_argument("group table rows are not permutations");
      seen[c] = true;
    }
    if (table_[0][a] != a || table_[a][0] != a) throw std::invalid_argument("element 0 is not the identity");
  }
  if (n <= 200)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
            throw std::invalid_argument("group table is not associative");
  inv_.assign(n, -1);
  ord_.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == 0) inv_[a] = b;
    int x = a, k = 1;
    while (x != 0) x = table_[x][a], ++k;
    ord_[a] = k;
    exponent_ = std::lcm(exponent_, k);
  }
  cls_.assign(n, -1);
  for (int g = 0; g < n; ++g) {
    if (cls_[g] >= 0) continue;
    std::set<int> c;
    for (int h = 0; h < n; ++h) c.insert(table_[table_[h][g]][inv_[h]]);
    for (int x : c) cls_[x] = (int)classes_.size();
    classes_.emplace_back(c.begin(), c.end());
  }
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<int>>& gens) {
  const int m = gens.empty() ? 1 : (int)gens[0].size();
  std::vector<int> id(m);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, int> index{{id, 0}};
  auto compose = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(m);
    for (int x = 0; x < m; ++x) r[x] = a[b[x]];
    return r;
  };
  for (size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      auto p = compose(elems[i], g);
      if (!index.count(p)) {
        index[p] = (int)elems.size();
        elems.push_back(p);
      }
    }
  const int n = (int)elems.size();
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = index.at(compose(elems[a], elems[b]));
  return FiniteGroup(std::move(t));
}

int FiniteGroup::power(int a, long k) const {
  k %= ord_[a];
  if (k < 0) k += ord_[a];
  int x = 0;
  for (long i = 0; i < k; ++i) x = table_[x][a];
  return x;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = 0; b < a; ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

std::vector<int> FiniteGroup::generated(const std::vector<int>& gens) const {
  std::set<int> seen{0};
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int g : gens) {
      int y = table_[x][g];
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

FiniteGroup FiniteGroup::subgroup(const std::vector<int>& elems) const {
  if (elems.empty() || elems[0] != 0) throw std::invalid_argument("subgroup list must start with the identity");
  std::map<int, int> pos;
  for (size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = (int)i;
  const int n = (int)elems.size();
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto it = pos.find(table_[elems[a]][elems[b]]);
      if (it == pos.end()) throw std::invalid_argument("subset is not closed under multiplication");
      t[a][b] = it->second;
    }
  return FiniteGroup(std::move(t));
}

MatrixGroup MatrixGroup::generate(const std::vector<IntMat>& gens, int dim, std::size_t bound) {
  MatrixGroup out;
  out.mats.push_back(IntMat::identity(dim));
  std::map<IntMat, int> index{{out.mats[0], 0}};
  for (size_t i = 0; i < out.mats.size(); ++i)
    for (const auto& g : gens) {
      IntMat m = out.mats[i] * g;
      if (index.count(m)) continue;
      if (out.mats.size() >= bound) throw std::runtime_error("matrix group exceeds the order bound");
      index[m] = (int)out.mats.size();
      out.mats.push_back(m);
    }
  const int n = (int)out.mats.size();
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = index.at(out.mats[a] * out.mats[b]);
  out.group = FiniteGroup(std::move(t));
  return out;
}

// ---------------------------------------------------------------- Dixon-Schneider

namespace {

using i64 = std::int64_t;

i64 powmod(i64 a, i64 e, i64 p) {
  i64 r = 1;
  a %= p;
  if (a < 0) a += p;
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

i64 invmod(i64 a, i64 p) { return powmod(a, p - 2, p); }

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using ModMat = std::vector<std::vector<i64>>;  // row-major, rows x cols

// Basis of the right kernel of A (rows x cols) mod p, as column vectors.
std::vector<std::vector<i64>> kernel_mod(ModMat A, int cols, i64 p) {
  const int rows = (int)A.size();
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int s = -1;
    for (int i = r; i < rows; ++i)
      if (A[i][c] % p != 0) { s = i; break; }
    if (s < 0) continue;
    std::swap(A[s], A[r]);
    i64 iv = invmod(A[r][c], p);
    for (int j = 0; j < cols; ++j) A[r][j] = A[r][j] * iv % p;
    for (int i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      i64 f = A[i][c];
      for (int j = 0; j < cols; ++j) A[i][j] = ((A[i][j] - f * A[r][j]) % p + p) % p;
    }
    piv.push_back(c);
    ++r;
  }
  std::vector<bool> is_piv(cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<std::vector<i64>> out;
  for (int f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<i64> v(cols, 0);
    v[f] = 1;
    for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = (p - A[k][f]) % p;
    out.push_back(v);
  }
  return out;
}

// c_{ijl} = #{x in C_i : x^{-1} g_l in C_j}; M[i][j][l].
std::vector<std::vector<std::vector<i64>>> class_matrices(const FiniteGroup& G) {
  const int k = G.nclasses();
  std::vector<std::vector<std::vector<i64>>> M(k, std::vector<std::vector<i64>>(k, std::vector<i64>(k, 0)));
  for (int i = 0; i < k; ++i)
    for (int l = 0; l < k; ++l) {
      int gl = G.representative(l);
      for (int x : G.classes()[i]) ++M[i][G.class_of(G.mul(G.inverse(x), gl))][l];
    }
  return M;
}

std::string row_key(const std::vector<Cyclotomic>& row) {
  std::string s;
  for (const auto& c : row) s += c.str() + ";";
  return s;
}

// One Dixon-Schneider pass modulo p; empty on failure.
std::vector<std::vector<Cyclotomic>> dixon_pass(const FiniteGroup& G,
                                                const std::vector<std::vector<std::vector<i64>>>& M, i64 p) {
  const int k = G.nclasses(), n = G.order(), e = G.exponent();
  // Common eigenspaces, as lists of basis columns in F_p^k.
  std::vector<std::vector<std::vector<i64>>> spaces;
  {
    std::vector<std::vector<i64>> std_basis;
    for (int c = 0; c < k; ++c) {
      std::vector<i64> v(k, 0);
      v[c] = 1;
      std_basis.push_back(v);
    }
    spaces.push_back(std_basis);
  }
  for (int i = 0; i < k; ++i) {
    std::vector<std::vector<std::vector<i64>>> next;
    for (auto& B : spaces) {
      const int d = (int)B.size();
      if (d == 1) {
        next.push_back(B);
        continue;
      }
      // AB = M_i B as k x d.
      ModMat MB(k, std::vector<i64>(d, 0)), Bm(k, std::vector<i64>(d, 0));
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < d; ++c) {
          Bm[r][c] = B[c][r];
          i64 s = 0;
          for (int t = 0; t < k; ++t) s = (s + M[i][r][t] % p * B[c][t]) % p;
          MB[r][c] = s;
        }
      int found = 0;
      for (i64 lam = 0; lam < p && found < d; ++lam) {
        ModMat A(k, std::vector<i64>(d));
        for (int r = 0; r < k; ++r)
          for (int c = 0; c < d; ++c) A[r][c] = ((MB[r][c] - lam * Bm[r][c]) % p + p) % p;
        auto ker = kernel_mod(A, d, p);
        if (ker.empty()) continue;
        found += (int)ker.size();
        std::vector<std::vector<i64>> sub;
        for (const auto& cvec : ker) {
          std::vector<i64> v(k, 0);
          for (int c = 0; c < d; ++c)
            for (int r = 0; r < k; ++r) v[r] = (v[r] + cvec[c] * B[c][r]) % p;
          sub.push_back(v);
        }
        next.push_back(sub);
      }
      if (found != d) return {};
    }
    spaces = std::move(next);
  }
  if ((int)spaces.size() != k) return {};
  std::vector<int> inv_cls(k);
  for (int c = 0; c < k; ++c) inv_cls[c] = G.class_of(G.inverse(G.representative(c)));
  // Primitive e-th root of unity in F_p.
  i64 gen = 2;
  for (;; ++gen) {
    bool ok = true;
    i64 m = p - 1;
    for (i64 q = 2; q * q <= m; ++q) {
      if (m % q) continue;
      if (powmod(gen, (p - 1) / q, p) == 1) ok = false;
      while (m % q == 0) m /= q;
    }
    if (m > 1 && powmod(gen, (p - 1) / m, p) == 1) ok = false;
    if (ok) break;
  }
  const i64 zhat = powmod(gen, (p - 1) / e, p);
  std::vector<std::vector<Cyclotomic>> rows;
  for (auto& B : spaces) {
    std::vector<i64> w = B[0];
    if (w[0] == 0) return {};
    i64 s = invmod(w[0], p);
    for (auto& x : w) x = x * s % p;
    i64 S = 0;
    for (int c = 0; c < k; ++c) S = (S + w[c] * w[inv_cls[c]] % p * invmod(G.class_size(c), p)) % p;
    if (S == 0) return {};
    i64 d2 = (i64)n % p * invmod(S, p) % p;
    i64 deg = -1;
    for (i64 dd = 1; dd * dd <= n; ++dd)
      if (dd * dd % p == d2) deg = dd;
    if (deg < 0) return {};
    std::vector<i64> chat(k);
    for (int c = 0; c < k; ++c) chat[c] = w[c] * deg % p * invmod(G.class_size(c), p) % p;
    std::vector<Cyclotomic> row(k);
    for (int c = 0; c < k; ++c) {
      int g = G.representative(c);
      int o = G.element_order(g);
      i64 zo = powmod(zhat, e / o, p);
      Cyclotomic val;
      i64 total = 0;
      for (int kk = 0; kk < o; ++kk) {
        i64 m = 0;
        for (int j = 0; j < o; ++j) {
          i64 term = chat[G.class_of(G.power(g, j))] * powmod(zo, (i64)((o - (j * (i64)kk) % o) % o), p) % p;
          m = (m + term) % p;
        }
        m = m * invmod(o, p) % p;
        if (m > deg) return {};
        total += m;
        if (m) val += Cyclotomic::zeta(o, kk) * Cyclotomic((long)m);
      }
      if (total != deg) return {};
      row[c] = val;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

CharacterTable character_table(const FiniteGroup& G) {
  const int n = G.order(), e = G.exponent();
  auto M = class_matrices(G);
  i64 p = (i64)e + 1;
  while (p <= n || p * p <= 4 * (i64)n || !is_prime(p)) p += e;
  for (int attempt = 0; attempt < 40; ++attempt, p += e) {
    while (!is_prime(p)) p += e;
    auto rows = dixon_pass(G, M, p);
    if (rows.empty()) continue;
    CharacterTable T;
    std::vector<std::pair<std::pair<int, std::string>, std::vector<Cyclotomic>>> keyed;
    for (auto& r : rows) {
      int deg = (int)r[0].rational_value().get_num().get_si();
      bool trivial = std::all_of(r.begin(), r.end(), [](const Cyclotomic& c) { return c.is_one(); });
      keyed.push_back({{deg, trivial ? std::string() : row_key(r)}, r});
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [key, r] : keyed) {
      T.degrees.push_back(key.first);
      T.chi.push_back(r);
    }
    T.prime = p;
    if (check_orthogonality(G, T)) return T;
  }
  throw std::runtime_error("character table: no admissible prime found");
}

bool check_orthogonality(const FiniteGroup& G, const CharacterTable& T) {
  const int k = G.nclasses();
  if (T.size() != k) return false;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      Cyclotomic s;
      for (int c = 0; c < k; ++c) s += Cyclotomic((long)G.class_size(c)) * T.chi[a][c].conj() * T.chi[b][c];
      if (s != Cyclotomic(a == b ? (long)G.order() : 0L)) return false;
    }
  for (int c = 0; c < k; ++c)
    for (int c2 = 0; c2 < k; ++c2) {
      Cyclotomic s;
      for (int a = 0; a < k; ++a) s += T.chi[a][c].conj() * T.chi[a][c2];
      Cyclotomic want = c == c2 ? Cyclotomic(ratio(G.order(), G.class_size(c))) : Cyclotomic(0L);
      if (s != want) return false;
    }
  return true;
}

std::vector<int> dual_characters(const CharacterTable& T) {
  std::vector<int> out(T.size(), -1);
  for (int a = 0; a < T.size(); ++a) {
    std::vector<Cyclotomic> c;
    for (const auto& x : T.chi[a]) c.push_back(x.conj());
    for (int b = 0; b < T.size(); ++b)
      if (T.chi[b] == c) out[a] = b;
  }
  return out;
}

std::vector<std::vector<std::complex<double>>> burnside_table_numeric(const FiniteGroup& G, unsigned seed) {
  const int k = G.nclasses(), n = G.order();
  auto M = class_matrices(G);
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(k, k);
  for (int i = 0; i < k; ++i) {
    double c = dist(rng);
    for (int r = 0; r < k; ++r)
      for (int s = 0; s < k; ++s) A(r, s) += c * (double)M[i][r][s];
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(A);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigen decomposition failed");
  Eigen::MatrixXcd V = es.eigenvectors();
  std::vector<int> inv_cls(k);
  for (int c = 0; c < k; ++c) inv_cls[c] = G.class_of(G.inverse(G.representative(c)));
  std::vector<std::vector<std::complex<double>>> out;
  for (int j = 0; j < k; ++j) {
    std::vector<std::complex<double>> w(k);
    for (int c = 0; c < k; ++c) w[c] = V(c, j) / V(0, j);
    std::complex<double> S = 0;
    for (int c = 0; c < k; ++c) S += w[c] * w[inv_cls[c]] / (double)G.class_size(c);
    double deg = std::sqrt(std::real((double)n / S));
    std::vector<std::complex<double>> row(k);
    for (int c = 0; c < k; ++c) row[c] = w[c] * deg / (double)G.class_size(c);
    out.push_back(row);
  }
  return out;
}

bool tables_agree(const CharacterTable& exact, const std::vector<std::vector<std::complex<double>>>& approx,
                  double tol) {
  if ((int)approx.size() != exact.size()) return false;
  std::vector<bool> used(approx.size(), false);
  for (const auto& row : exact.chi) {
    bool hit = false;
    for (size_t j = 0; j < approx.size() && !hit; ++j) {
      if (used[j]) continue;
      bool same = true;
      for (size_t c = 0; c < row.size() && same; ++c) same = std::abs(row[c].to_complex() - approx[j][c]) < tol;
      if (same) used[j] = hit = true;
    }
    if (!hit) return false;
  }
  return true;
}

// ---------------------------------------------------------------- small groups

std::vector<std::pair<std::string, FiniteGroup>> small_groups() {
  auto cyc = [](int m) {
    std::vector<int> p(m);
    for (int i = 0; i < m; ++i) p[i] = (i + 1) % m;
    return p;
  };
  std::vector<std::pair<std::string, FiniteGroup>> out;
  out.push_back({"1", FiniteGroup()});
  for (int m : {2, 3, 4, 5, 6, 7, 8}) out.push_back({"Z" + std::to_string(m), FiniteGroup::from_permutations({cyc(m)})});
  out.push_back({"Z2xZ2", FiniteGroup::from_permutations({{1, 0, 2, 3}, {0, 1, 3, 2}})});
  out.push_back({"S3", FiniteGroup::from_permutations({{1, 2, 0}, {1, 0, 2}})});
  out.push_back({"Z4xZ2", FiniteGroup::from_permutations({{1, 2, 3, 0, 4, 5}, {0, 1, 2, 3, 5, 4}})});
  out.push_back({"Z2xZ2xZ2", FiniteGroup::from_permutations({{1, 0, 2, 3, 4, 5}, {0, 1, 3, 2, 4, 5}, {0, 1, 2, 3, 5, 4}})});
  out.push_back({"D4", FiniteGroup::from_permutations({{1, 2, 3, 0}, {0, 3, 2, 1}})});
  // Quaternion group by its left regular action; index 4*sign + unit, units 1, i, j, k.
  static const int unit_mul[4][4][2] = {{{0, 0}, {0, 1}, {0, 2}, {0, 3}},
                                        {{0, 1}, {1, 0}, {0, 3}, {1, 2}},
                                        {{0, 2}, {1, 3}, {1, 0}, {0, 1}},
                                        {{0, 3}, {0, 2}, {1, 1}, {1, 0}}};
  auto left = [&](int a) {
    std::vector<int> p(8);
    for (int b = 0; b < 8; ++b) {
      int sa = a / 4, ua = a % 4, sb = b / 4, ub = b % 4;
      int s = sa ^ sb ^ unit_mul[ua][ub][0];
      p[b] = 4 * s + unit_mul[ua][ub][1];
    }
    return p;
  };
  out.push_back({"Q8", FiniteGroup::from_permutations({left(1), left(2)})});
  return out;
}

std::vector<std::vector<std::vector<int>>> group_sets(const FiniteGroup& G, int max_size) {
  const int n = G.order();
  std::set<std::vector<int>> subs;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      for (int c = b; c < n; ++c) subs.insert(G.generated({a, b, c}));
  // One subgroup per conjugacy class, of index at most max_size.
  std::vector<std::vector<int>> reps;
  std::set<std::vector<int>> covered;
  for (const auto& H : subs) {
    if (covered.count(H) || n / (int)H.size() > max_size) continue;
    reps.push_back(H);
    for (int g = 0; g < n; ++g) {
      std::vector<int> c;
      for (int h : H) c.push_back(G.mul(G.mul(g, h), G.inverse(g)));
      std::sort(c.begin(), c.end());
      covered.insert(c);
    }
  }
  // Transitive actions on left cosets.
  std::vector<std::vector<std::vector<int>>> transitive;
  for (const auto& H : reps) {
    std::vector<std::vector<int>> cosets;
    std::map<std::vector<int>, int> idx;
    for (int g = 0; g < n; ++g) {
      std::vector<int> c;
      for (int h : H) c.push_back(G.mul(g, h));
      std::sort(c.begin(), c.end());
      if (!idx.count(c)) {
        idx[c] = (int)cosets.size();
        cosets.push_back(c);
      }
    }
    std::vector<std::vector<int>> act(n, std::vector<int>(cosets.size()));
    for (int g = 0; g < n; ++g)
      for (size_t u = 0; u < cosets.size(); ++u) {
        std::vector<int> c;
        for (int x : cosets[u]) c.push_back(G.mul(g, x));
        std::sort(c.begin(), c.end());
        act[g][u] = idx.at(c);
      }
    transitive.push_back(act);
  }
  // Multisets of transitive pieces with total size <= max_size.
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> pick;
  std::function<void(int, int)> rec = [&](int start, int size) {
    if (!pick.empty()) {
      std::vector<std::vector<int>> act(n);
      int off = 0;
      for (int t : pick) {
        int m = (int)transitive[t][0].size();
        for (int g = 0; g < n; ++g)
          for (int u = 0; u < m; ++u) act[g].push_back(off + transitive[t][g][u]);
        off += m;
      }
      out.push_back(act);
    }
    for (int t = start; t < (int)transitive.size(); ++t) {
      int m = (int)transitive[t][0].size();
      if (size + m > max_size) continue;
      pick.push_back(t);
      rec(t, size + m);
      pick.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace ahrg
