#include "ahrg/suites.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace ahrg {

void SuiteResult::fail(const std::string& why) {
  passed = false;
  if (failures.size() < 8) failures.push_back(why);
}

TorusPoint rank_one_point(const RootDatum& d, const Rational& turn) {
  const IntVec& a = d.root(d.simple_root(0));
  RatVec tor(d.rank());
  for (int j = 0; j < d.rank(); ++j)
    if (a[j] != 0) {
      tor[j] = turn / Rational(a[j]);
      break;
    }
  TorusPoint t(tor, RatVec(d.rank()));
  if (t.eval(a).turn != frac_mod1(turn)) throw std::logic_error("rank_one_point: bad torsion lift");
  return t;
}

std::vector<TorusPoint> torsion_points(const ParabolicData& pd, int rank, int n) {
  const int r = pd.upper_rank();
  std::vector<IntVec> up(rank);
  for (int i = 0; i < rank; ++i) {
    IntVec e(rank, 0);
    e[i] = 1;
    up[i] = pd.to_upper(e);
  }
  std::vector<TorusPoint> out;
  IntVec u(r, 0);
  while (true) {
    RatVec tor(rank);
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < r; ++j) tor[i] += ratio(u[j] * up[i][j], n);
    out.emplace_back(tor, RatVec(rank));
    int j = 0;
    while (j < r && ++u[j] == n) u[j++] = 0;
    if (j == r) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<TorusPoint> torsion_points_upto(int rank, int n) {
  std::set<TorusPoint> pts;
  for (int k = 1; k <= n; ++k) {
    IntVec u(rank, 0);
    while (true) {
      RatVec tor(rank);
      for (int i = 0; i < rank; ++i) tor[i] = ratio(u[i], k);
      pts.insert(TorusPoint(tor, RatVec(rank)));
      int j = 0;
      while (j < rank && ++u[j] == k) u[j++] = 0;
      if (j == rank) break;
    }
  }
  return {pts.begin(), pts.end()};
}

// ---------------------------------------------------------------- scans

namespace {

ScanRecord process(const Groupoid& G, const HeckeAlgebra& H, const Parameters& q, const SpectralDatum& delta,
                   const TorusPoint& t) {
  ScanRecord rec;
  rec.delta = delta.name;
  rec.t = t;
  rec.key = delta.name + " " + t.str();
  const RootDatum& d = G.weyl().datum();
  try {
    InductionDatum xi{G.parabolic().P, delta, t};
    DatumPosition pos = classify_position(d, xi.P, t);
    if (pos == DatumPosition::general) throw std::invalid_argument("datum in general position");
    rec.nontempered = pos != DatumPosition::unitary;
    rec.rg = rec.nontempered ? rgroup_nontempered(G, q, xi) : rgroup(G, q, xi);
    rec.gram = arthur_gram(G, rec.rg);
    if (delta.realized()) {
      HeckeModule m = induced_module(H, G.parabolic(), delta, t);
      rec.module_ok = check_module(H, G.parabolic(), delta, t, m).all();
      if (!q.mode().generic()) rec.commutant = commutant_dim(H, m);
    }
  } catch (const std::exception& e) {
    rec.error = e.what();
  }
  return rec;
}

}  // namespace

std::vector<ScanRecord> scan_data(const Groupoid& G, const Parameters& q, const std::vector<SpectralDatum>& deltas,
                                  const std::vector<TorusPoint>& points, int jobs) {
  std::vector<std::pair<int, int>> work;
  for (int a = 0; a < (int)deltas.size(); ++a)
    for (int b = 0; b < (int)points.size(); ++b) work.push_back({a, b});
  std::vector<ScanRecord> out(work.size());
  jobs = std::max(1, std::min<int>(jobs, (int)work.size()));
  auto worker = [&](int id) {
    HeckeAlgebra H(G.weyl(), q);  // per-thread caches
    for (size_t i = id; i < work.size(); i += jobs)
      out[i] = process(G, H, q, deltas[work[i].first], points[work[i].second]);
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker, j);
    for (auto& th : pool) th.join();
  }
  std::stable_sort(out.begin(), out.end(), [](const ScanRecord& a, const ScanRecord& b) { return a.key < b.key; });
  return out;
}

// ---------------------------------------------------------------- suites

AnchorResult rank_one_anchor(const std::string& lattice, const Rational& turn) {
  RootDatum d = RootDatum::build({"A1", lattice, {}});
  WeylGroup W(d);
  Parameters q = Parameters::equal(d, VMode::numeric(2));
  Groupoid G(W, {});
  HeckeAlgebra H(W, q);
  SpectralDatum sd = one_dim_reps(H, G.parabolic())[0];
  TorusPoint t = rank_one_point(d, turn);
  RGroupData R = rgroup(G, q, InductionDatum{{}, sd, t});
  AnchorResult a;
  a.stabilizer = (int)R.stabilizer.size();
  a.rgroup = (int)R.rgroup.size();
  a.mirrors = (int)R.mirrors_xi.size();
  a.gram = arthur_gram(G, R);
  a.commutant = commutant_dim(H, induced_module(H, G.parabolic(), sd, t));
  return a;
}

SuiteResult knapp_stein_unitary(const std::vector<std::string>& types, int n, int jobs,
                                std::vector<ScanRecord>* keep) {
  SuiteResult res;
  res.name = "knapp-stein unitary";
  std::map<int, int> hist;
  for (const auto& type : types)
    for (const char* lat : {"sc", "adjoint"}) {
      RootDatum d = RootDatum::build({type, lat, {}});
      WeylGroup W(d);
      Parameters q = Parameters::equal(d, VMode::numeric(2));
      Groupoid G(W, {});
      HeckeAlgebra H(W, q);
      auto deltas = one_dim_reps(H, G.parabolic());
      auto recs = scan_data(G, q, deltas, torsion_points(G.parabolic(), d.rank(), n), jobs);
      for (auto& r : recs) {
        ++res.cases;
        std::string where = type + "/" + lat + " " + r.key;
        if (!r.error.empty()) res.fail(where + ": " + r.error);
        else if (!r.module_ok) res.fail(where + ": module relations fail");
        else if (!r.knapp_stein())
          res.fail(where + ": commutant " + std::to_string(r.commutant) + " vs |r| " +
                   std::to_string(r.rgroup_size()));
        ++hist[(int)r.rg.rgroup.size()];
        if (keep) keep->push_back(std::move(r));
      }
    }
  std::ostringstream os;
  os << res.cases << " data; |r| histogram";
  for (auto [k, v] : hist) os << " " << k << ":" << v;
  res.summary = os.str();
  return res;
}

SuiteResult knapp_stein_positive_b2(int jobs, std::vector<ScanRecord>* keep) {
  SuiteResult res;
  res.name = "knapp-stein positive B2";
  long nontrivial = 0;
  for (const char* lat : {"sc", "adjoint"}) {
    RootDatum d = RootDatum::build({"B2", lat, {}});
    WeylGroup W(d);
    Parameters q = Parameters::equal(d, VMode::numeric(2));
    Groupoid G(W, {});
    HeckeAlgebra H(W, q);
    auto deltas = one_dim_reps(H, G.parabolic());
    // Non-unitary points in the closed positive cone: torsion of order 2 times
    // an absolute value with small integral exponents (v = 2 keeps them rational).
    std::vector<TorusPoint> pts;
    const std::vector<Rational> ex = {0, 1, 2, 3};
    for (const auto& u : torsion_points(G.parabolic(), d.rank(), 2))
      for (const auto& e0 : ex)
        for (const auto& e1 : ex) {
          TorusPoint t(u.torsion, {e0, e1});
          if (!t.is_unitary() && classify_position(d, {}, t) == DatumPosition::positive) pts.push_back(t);
        }
    auto recs = scan_data(G, q, deltas, pts, jobs);
    for (auto& r : recs) {
      ++res.cases;
      std::string where = std::string("B2/") + lat + " " + r.key;
      if (!r.error.empty()) res.fail(where + ": " + r.error);
      else if (!r.module_ok) res.fail(where + ": module relations fail");
      else if (!r.rg.ok()) res.fail(where + ": decomposition checks fail");
      else if (!r.knapp_stein())
        res.fail(where + ": commutant " + std::to_string(r.commutant) + " vs |r| " +
                 std::to_string(r.rgroup_size()));
      if (r.rg.rgroup.size() > 1) ++nontrivial;
      if (keep) keep->push_back(std::move(r));
    }
  }
  if (res.cases < 3) res.fail("fewer than 3 positive non-unitary data");
  res.summary = std::to_string(res.cases) + " positive non-unitary data, " + std::to_string(nontrivial) +
                " with nontrivial r";
  return res;
}

SuiteResult semidirect_decomposition(const std::vector<ScanRecord>& records) {
  SuiteResult res;
  res.name = "semidirect decomposition";
  for (const auto& r : records) {
    if (!r.error.empty()) continue;
    ++res.cases;
    const auto& g = r.rg;
    bool sizes = g.stabilizer.size() == g.rgroup.size() * g.weyl_R.size();
    if (!(g.unique_factorization && g.normal && g.root_system && g.simply_transitive && sizes))
      res.fail(r.key + ": factorization " + std::to_string(g.unique_factorization) + " normal " +
               std::to_string(g.normal) + " roots " + std::to_string(g.root_system) + " transitive " +
               std::to_string(g.simply_transitive));
  }
  if (res.cases == 0) res.fail("no data");
  res.summary = std::to_string(res.cases) + " stabilizers factor as r x| W(R)";
  return res;
}

namespace {

struct WeylCase {
  RootDatum d;
  std::unique_ptr<WeylGroup> W;
};

}  // namespace

SuiteResult oracle_equality(std::uint64_t seed, int count) {
  SuiteResult res;
  res.name = "elliptic pairing oracle";
  const std::vector<std::string> types = {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA1", "A1xA2", "A1xA1xA1", "A1xB2"};
  std::vector<WeylCase> cases;
  for (const auto& t : types)
    for (const char* lat : {"sc", "adjoint"}) {
      WeylCase c{RootDatum::build({t, lat, {}}), nullptr};
      cases.push_back(std::move(c));
    }
  for (auto& c : cases) c.W = std::make_unique<WeylGroup>(c.d);
  std::mt19937_64 rng(seed);
  struct Sub {
    FiniteGroup G;
    RealRep V;
    CharacterTable T;
  };
  std::map<std::pair<int, std::vector<int>>, Sub> cache;
  long nontrivial = 0;
  for (int it = 0; it < count; ++it) {
    int ci = (int)(rng() % cases.size());
    const WeylGroup& W = *cases[ci].W;
    int ngen = 1 + (int)(rng() % 3);
    std::vector<int> gens;
    for (int i = 0; i < ngen; ++i) gens.push_back((int)(rng() % W.order()));
    // Closure under multiplication.
    std::vector<int> elems{0};
    std::set<int> seen{0};
    for (size_t i = 0; i < elems.size(); ++i)
      for (int g : gens) {
        int x = W.mul(elems[i], g);
        if (seen.insert(x).second) elems.push_back(x);
      }
    std::sort(elems.begin(), elems.end());
    auto key = std::make_pair(ci, elems);
    auto itc = cache.find(key);
    if (itc == cache.end()) {
      std::vector<std::vector<int>> tab(elems.size(), std::vector<int>(elems.size()));
      for (size_t a = 0; a < elems.size(); ++a)
        for (size_t b = 0; b < elems.size(); ++b)
          tab[a][b] = (int)(std::lower_bound(elems.begin(), elems.end(), W.mul(elems[a], elems[b])) - elems.begin());
      Sub s{FiniteGroup(tab), {}, {}};
      std::vector<IntMat> mats;
      for (int w : elems) mats.push_back(W.matrix(w));
      s.V = RealRep::from_int(mats);
      s.T = character_table(s.G);
      itc = cache.emplace(key, std::move(s)).first;
    }
    const Sub& s = itc->second;
    auto random_char = [&] {
      ClassFunction f(s.G.nclasses());
      bool any = false;
      while (!any)
        for (int a = 0; a < s.T.size(); ++a) {
          long m = (long)(rng() % 3);
          if (!m) continue;
          any = true;
          for (int c = 0; c < s.G.nclasses(); ++c) f[c] += s.T.chi[a][c] * Cyclotomic(m);
        }
      return f;
    };
    ClassFunction r1 = random_char(), r2 = random_char();
    ++res.cases;
    Cyclotomic a = elliptic_pairing_arthur(s.G, s.V, r1, r2);
    try {
      Cyclotomic k = elliptic_pairing_koszul(s.G, s.V, r1, r2);
      if (a != k) res.fail(cases[ci].d.label() + " |G|=" + std::to_string(s.G.order()) + ": " + a.str() + " vs " + k.str());
      if (!a.is_zero()) ++nontrivial;
    } catch (const std::exception& e) {
      res.fail(cases[ci].d.label() + ": " + e.what());
    }
  }
  res.summary = std::to_string(res.cases) + " random pairings over " + std::to_string(cache.size()) +
                " subgroups, " + std::to_string(nontrivial) + " nonzero";
  return res;
}

SuiteResult q1_isometry(const std::vector<std::string>& types, int max_order, std::vector<GramReport>* keep) {
  SuiteResult res;
  res.name = "q=1 isometry";
  for (const auto& type : types)
    for (const char* lat : {"sc", "adjoint"}) {
      RootDatum d = RootDatum::build({type, lat, {}});
      WeylGroup W(d);
      for (const auto& t : torsion_points_upto(d.rank(), max_order)) {
        ++res.cases;
        try {
          Q1Report r = q1_isometry_check(W, t);
          if (!r.rows_matched) res.fail(type + "/" + lat + " " + t.str() + ": character rows do not match");
          else if (!r.equal) res.fail(type + "/" + lat + " " + t.str() + ": Gram matrices differ");
          if (keep) keep->push_back(std::move(r.gram));
        } catch (const std::exception& e) {
          res.fail(type + "/" + lat + " " + t.str() + ": " + e.what());
        }
      }
    }
  res.summary = std::to_string(res.cases) + " torsion points";
  return res;
}

SuiteResult radical_vanishing(const std::vector<const GramReport*>& grams) {
  SuiteResult res;
  res.name = "radical of EP";
  for (const auto* g : grams) {
    ++res.cases;
    if (!g->induced_vanishing) res.fail(g->label + ": Gram times degrees is nonzero");
  }
  if (res.cases == 0) res.fail("no Gram matrices");
  res.summary = std::to_string(res.cases) + " Gram matrices";
  return res;
}

SuiteResult gram_psd_rank(const std::vector<const GramReport*>& grams) {
  SuiteResult res;
  res.name = "Gram PSD and rank";
  std::map<int, int> ranks;
  for (const auto* g : grams) {
    ++res.cases;
    if (!g->hermitian) res.fail(g->label + ": not Hermitian");
    else if (!g->psd) res.fail(g->label + ": not positive semidefinite");
    else if (!g->rank_matches)
      res.fail(g->label + ": rank " + std::to_string(g->rank) + " vs elliptic classes " +
               std::to_string(g->elliptic_classes));
    ++ranks[g->rank];
  }
  if (res.cases == 0) res.fail("no Gram matrices");
  std::ostringstream os;
  os << res.cases << " Gram matrices; rank histogram";
  for (auto [k, v] : ranks) os << " " << k << ":" << v;
  res.summary = os.str();
  return res;
}

SuiteResult crossed_products(int max_group, int max_set) {
  SuiteResult res;
  res.name = "crossed product";
  for (const auto& [name, G] : small_groups()) {
    if (G.order() > max_group) continue;
    for (const auto& act : group_sets(G, max_set)) {
      ++res.cases;
      CrossedProductReport r = crossed_product_iso_check(G, act);
      if (!r.ok())
        res.fail(name + " |U|=" + std::to_string(r.set_size) + ": action " + std::to_string(r.action_ok) +
                 " invariants " + std::to_string(r.lands_in_invariants) + " mult " + std::to_string(r.multiplicative) +
                 " L'L " + std::to_string(r.left_inverse) + " LL' " + std::to_string(r.right_inverse));
    }
  }
  res.summary = std::to_string(res.cases) + " G-sets";
  return res;
}

SuiteResult morita(const std::vector<std::string>& groups) {
  SuiteResult res;
  res.name = "morita multiplicity";
  for (const auto& want : groups) {
    bool found = false;
    for (const auto& [name, G] : small_groups()) {
      if (name != want) continue;
      found = true;
      CharacterTable T = character_table(G);
      for (int s = 0; s < T.size(); ++s) {
        ++res.cases;
        MoritaReport r = morita_induced_check(G, T, s);
        if (!r.ok())
          res.fail(name + " sigma " + std::to_string(s) + ": got row " + std::to_string(r.matches) + ", dual is " +
                   std::to_string(r.expected));
      }
    }
    if (!found) res.fail("unknown group " + want);
  }
  res.summary = std::to_string(res.cases) + " irreducibles";
  return res;
}

namespace {

HeckeElement random_element(const WeylGroup& W, const VMode& mode, std::mt19937_64& rng) {
  const int n = W.datum().rank();
  HeckeElement e;
  int terms = 1 + (int)(rng() % 2);
  for (int i = 0; i < terms; ++i) {
    Theta x(n);
    for (auto& c : x) c = (std::int64_t)(rng() % 3) - 1;
    long coef = (long)(rng() % 4) - 2;
    if (coef == 0) coef = 1;
    QPower c = QPower(coef) * QPower::vpow(Rational((long)(rng() % 3) - 1), mode);
    HeckeElement t = hecke_scale(HeckeElement{{{x, (int)(rng() % W.order())}, QPower(1)}}, c);
    e = hecke_add(e, t);
  }
  return e;
}

}  // namespace

SuiteResult algebra_soundness(const std::vector<std::string>& types, std::uint64_t seed, int triples) {
  SuiteResult res;
  res.name = "algebra soundness";
  std::mt19937_64 rng(seed);
  long modules = 0;
  for (const auto& type : types)
    for (bool generic : {true, false}) {
      RootDatum d = RootDatum::build({type, "sc", {}});
      WeylGroup W(d);
      VMode mode = generic ? VMode{} : VMode::numeric(2);
      std::string where = type + (generic ? "/generic" : "/numeric");
      // B2 runs with unequal parameters on its two root lengths.
      std::map<int, Rational> full;
      if (type == "B2") full = {{0, 2}, {1, 4}};
      Parameters q(d, mode, full, {});
      HeckeAlgebra H(W, q);
      for (int i = 0; i < triples; ++i) {
        ++res.cases;
        HeckeElement a = random_element(W, mode, rng), b = random_element(W, mode, rng),
                     c = random_element(W, mode, rng);
        if (!hecke_equal(H.multiply(H.multiply(a, b), c), H.multiply(a, H.multiply(b, c))))
          res.fail(where + ": associativity fails at triple " + std::to_string(i));
      }
      // Braid relations and central characters on principal series modules.
      Groupoid G(W, {});
      SpectralDatum sd = one_dim_reps(H, G.parabolic())[0];
      std::vector<TorusPoint> pts = torsion_points(G.parabolic(), d.rank(), 3);
      if (pts.size() > 6) pts.resize(6);
      RatVec ex(d.rank());
      ex[0] = 1;
      pts.push_back(TorusPoint(RatVec(d.rank()), ex));
      ex[0] = generic ? ratio(1, 2) : Rational(2);
      if (d.rank() > 1) ex[1] = -2;
      pts.push_back(TorusPoint(pts[1 % pts.size()].torsion, ex));
      for (const auto& t : pts) {
        ++modules;
        ++res.cases;
        HeckeModule m = induced_module(H, G.parabolic(), sd, t);
        ModuleChecks mc = check_module(H, G.parabolic(), sd, t, m);
        if (!mc.all())
          res.fail(where + " " + t.str() + ": quadratic " + std::to_string(mc.quadratic) + " braid " +
                   std::to_string(mc.braid) + " cross " + std::to_string(mc.cross) + " center " +
                   std::to_string(mc.center));
      }
    }
  res.summary = std::to_string(res.cases - modules) + " associativity triples, " + std::to_string(modules) +
                " modules";
  return res;
}

}  // namespace ahrg
