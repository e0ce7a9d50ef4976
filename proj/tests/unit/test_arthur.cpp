#include "ahrg/arthur.hpp"
#include "ahrg/suites.hpp"

#include <doctest.h>

using namespace ahrg;

namespace {

CycMat ints(std::initializer_list<std::initializer_list<long>> rows) {
  CycMat m((int)rows.size(), (int)rows.begin()->size());
  int i = 0;
  for (const auto& r : rows) {
    int j = 0;
    for (long x : r) m(i, j++) = Cyclotomic(x);
    ++i;
  }
  return m;
}

struct Principal {
  RootDatum d;
  WeylGroup W;
  Parameters q;
  Groupoid G;
  HeckeAlgebra H;
  explicit Principal(const CartanSpec& spec)
      : d(RootDatum::build(spec)), W(d), q(Parameters::equal(d, VMode::numeric(2))), G(W, {}), H(W, q) {}
  RGroupData at(const TorusPoint& t) const {
    return rgroup(G, q, InductionDatum{{}, one_dim_reps(H, G.parabolic())[0], t});
  }
};

}  // namespace

TEST_SUITE("arthur") {
  TEST_CASE("rank one Grams") {
    AnchorResult neg = rank_one_anchor("adjoint", ratio(1, 2));
    CHECK(neg.gram.gram == ints({{1, -1}, {-1, 1}}));
    CHECK(neg.gram.ok());
    CHECK(ell_rank(neg.gram) == 1);
    AnchorResult one = rank_one_anchor("adjoint", 0);
    CHECK(one.gram.gram == ints({{0}}));
    CHECK(ell_rank(one.gram) == 0);
    CHECK(one.gram.ok());
  }

  TEST_CASE("a central torus kills the elliptic form") {
    Principal p({"A1xT1", "adjoint", {}});
    RGroupData R = p.at(TorusPoint({ratio(1, 2), 0}, {0, 0}));
    REQUIRE(R.rgroup.size() == 2);
    GramReport g = arthur_gram(p.G, R);
    CHECK(g.gram.is_zero());
    CHECK(g.elliptic_classes == 0);
    CHECK(g.ok());
  }

  TEST_CASE("q = 1 isometry") {
    for (auto [type, rank] : std::vector<std::pair<const char*, int>>{{"A2", 1}, {"B2", 2}, {"G2", 3}}) {
      RootDatum d = RootDatum::build({type, "adjoint", {}});
      WeylGroup W(d);
      Q1Report r = q1_isometry_check(W, TorusPoint(2));
      CAPTURE(type);
      CHECK(r.rows_matched);
      CHECK(r.equal);
      CHECK(r.rank == rank);
      CHECK(induced_vanishing_check(r.gram));
    }
    RootDatum b2 = RootDatum::build({"B2", "sc", {}});
    WeylGroup W(b2);
    for (const TorusPoint& t : torsion_points_upto(2, 4)) CHECK(q1_isometry_check(W, t).equal);
  }

  TEST_CASE("twisted tables") {
    Principal p({"A1", "adjoint", {}});
    RGroupData R = p.at(TorusPoint({ratio(1, 2)}, {0}));
    REQUIRE(R.rgroup.size() == 2);
    GramReport plain = arthur_gram(p.G, R);
    TwistedTable T{{"a", "b"}, {"trivial", "trivial"}, {{Cyclotomic(1L), Cyclotomic(1L)}, {Cyclotomic(1L), Cyclotomic(-1L)}}};
    GramReport tw = arthur_gram(p.G, R, &T);
    CHECK(tw.twisted);
    CHECK(tw.gram == plain.gram);
    CHECK(tw.ok());
    TwistedTable bad = T;
    bad.cocycle[1] = "other";
    CHECK_THROWS_AS(arthur_gram(p.G, R, &bad), std::invalid_argument);
    TwistedTable short_row = T;
    short_row.values[0].pop_back();
    CHECK_THROWS_AS(arthur_gram(p.G, R, &short_row), std::invalid_argument);
  }

  TEST_CASE("elliptic rank over a scan") {
    Principal p({"B2", "adjoint", {}});
    auto deltas = one_dim_reps(p.H, p.G.parabolic());
    for (const ScanRecord& r : scan_data(p.G, p.q, deltas, torsion_points(p.G.parabolic(), 2, 2), 1)) {
      CAPTURE(r.key);
      REQUIRE(r.error.empty());
      CHECK(ell_rank(r.gram) == r.gram.elliptic_classes);
      CHECK(r.gram.ok());
    }
  }
}
