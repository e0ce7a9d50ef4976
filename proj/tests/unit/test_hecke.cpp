#include "ahrg/hecke.hpp"
#include "ahrg/suites.hpp"

#include <doctest.h>

#include <random>

using namespace ahrg;

namespace {

QPower vp(long e) { return QPower::vpow(e, VMode{}); }

}  // namespace

TEST_SUITE("hecke") {
  TEST_CASE("quadratic relation and theta products") {
    for (const char* lat : {"sc", "adjoint"}) {
      RootDatum d = RootDatum::build({"B2", lat, {}});
      WeylGroup W(d);
      Parameters q(d, VMode{}, {{0, 2}, {1, 4}}, {}, 2, 0);
      HeckeAlgebra H(W, q);
      for (int k = 0; k < 2; ++k) {
        int s = W.simple_reflection(k);
        QPower c = q.sqrt_difference(q.qs_exp(d.simple_root(k)));
        HeckeElement rhs = hecke_add(hecke_N(0, 2), hecke_scale(hecke_N(s, 2), c));
        CHECK(hecke_equal(H.multiply(hecke_N(s, 2), hecke_N(s, 2)), rhs));
      }
      CHECK(hecke_equal(H.multiply(hecke_theta({1, -2}), hecke_theta({3, 1})), hecke_theta({4, -1})));
    }
  }

  TEST_CASE("unequal parameters must be W-invariant") {
    RootDatum d = RootDatum::build({"A2", "sc", {}});
    CHECK_THROWS_AS(Parameters(d, VMode{}, {{0, 2}, {1, 4}}, {}), std::invalid_argument);
    CHECK_NOTHROW(Parameters(d, VMode{}, {{0, 4}, {1, 4}}, {}));
  }

  TEST_CASE("cross relation on SL2") {
    RootDatum d = RootDatum::build({"A1", "sc", {}});
    WeylGroup W(d);
    HeckeAlgebra H(W, Parameters::equal(d, VMode{}));
    // (theta_w - theta_{-w}) / (1 - theta_{-2w}) = theta_w for the fundamental weight w.
    auto ct = H.cross_term(0, {1});
    REQUIRE(ct.size() == 1);
    CHECK(ct.begin()->first == IntVec{1});
    CHECK(ct.begin()->second == vp(1) - vp(-1));
    int s = W.simple_reflection(0);
    HeckeElement lhs = H.multiply(hecke_N(s, 1), hecke_theta({-1}));
    HeckeElement rhs = hecke_add(hecke_N(s, 1), hecke_scale(hecke_N(0, 1), vp(-1) - vp(1)));
    rhs = H.multiply(hecke_theta({1}), rhs);
    CHECK(hecke_equal(lhs, rhs));
  }

  TEST_CASE("associativity on random elements") {
    RootDatum d = RootDatum::build({"A2", "adjoint", {}});
    WeylGroup W(d);
    HeckeAlgebra H(W, Parameters::equal(d, VMode{}));
    std::mt19937 rng(2);
    auto rnd = [&] {
      HeckeElement e;
      for (int k = 0; k < 2; ++k) {
        Theta x = {(long)(rng() % 3) - 1, (long)(rng() % 3) - 1};
        e = hecke_add(e, hecke_scale(H.multiply(hecke_theta(x), hecke_N((int)(rng() % W.order()), 2)),
                                     vp((long)(rng() % 3) - 1)));
      }
      return e;
    };
    for (int it = 0; it < 30; ++it) {
      HeckeElement a = rnd(), b = rnd(), c = rnd();
      CHECK(hecke_equal(H.multiply(H.multiply(a, b), c), H.multiply(a, H.multiply(b, c))));
    }
  }

  TEST_CASE("one-dimensional representations of H_P") {
    RootDatum d = RootDatum::build({"A1", "sc", {}});
    WeylGroup W(d);
    Parameters q = Parameters::equal(d, VMode{});
    HeckeAlgebra H(W, q);
    ParabolicData pd = parabolic_data(d, {0});
    // X = Zw and r is fixed on alpha = 2w only, so each sign type has two square roots.
    auto reps = one_dim_reps(H, pd);
    REQUIRE(reps.size() == 4);
    for (const SpectralDatum& sd : reps) {
      CAPTURE(sd.name);
      bool st = sd.name.rfind("St#", 0) == 0;
      CHECK((st || sd.name.rfind("triv#", 0) == 0));
      CHECK(sd.discrete == st);
      CHECK(sd.eps.at(0) == (st ? -vp(-1) : vp(1)));
      // r(alpha) = q^{-1} for the Steinberg character, q = v^2.
      CHECK(sd.r.eval(d.root(0)) == PhaseMonomial(0, st ? -2 : 2));
      CHECK(cc_norm(d, sd) == 2);
    }
    CHECK(reps[0].r.eval({1}) != reps[1].r.eval({1}));
    CHECK(cc_norm(d, one_dim_reps(H, parabolic_data(d, {}))[0]) == 0);
  }

  TEST_CASE("central character norm is invariant under W") {
    RootDatum d = RootDatum::build({"B2", "sc", {}});
    WeylGroup W(d);
    HeckeAlgebra H(W, Parameters::equal(d, VMode{}));
    for (const SpectralDatum& sd : one_dim_reps(H, parabolic_data(d, {1}))) {
      Rational n = cc_norm(d, sd);
      for (int w = 0; w < W.order(); ++w) {
        SpectralDatum moved = sd;
        moved.r = W.act(w, sd.r);
        CHECK(cc_norm(d, moved) == n);
      }
    }
  }

  TEST_CASE("induced modules satisfy the defining relations") {
    for (const char* type : {"A1", "B2"}) {
      RootDatum d = RootDatum::build({type, "sc", {}});
      WeylGroup W(d);
      HeckeAlgebra H(W, Parameters::equal(d, VMode::numeric(2)));
      ParabolicData pd = parabolic_data(d, {});
      SpectralDatum sd = one_dim_reps(H, pd)[0];
      TorusPoint t(std::vector<Rational>(d.rank(), ratio(1, 3)), std::vector<Rational>(d.rank(), 0));
      HeckeModule m = induced_module(H, pd, sd, t);
      CHECK(m.dim() == W.order());
      CHECK(check_module(H, pd, sd, t, m).all());
    }
  }

  TEST_CASE("commutant dimensions") {
    CHECK(rank_one_anchor("adjoint", ratio(1, 2)).commutant == 2);
    CHECK(rank_one_anchor("adjoint", 0).commutant == 1);
    CHECK(rank_one_anchor("sc", 0).commutant == 1);

    RootDatum d = RootDatum::build({"A1", "sc", {}});
    WeylGroup W(d);
    HeckeAlgebra H(W, Parameters::equal(d, VMode::numeric(2)));
    ParabolicData pd = parabolic_data(d, {0});
    for (const SpectralDatum& sd : one_dim_reps(H, pd)) {
      TorusPoint t(1);
      HeckeModule m = induced_module(H, pd, sd, t);
      CHECK(m.dim() == 1);
      CHECK(check_module(H, pd, sd, t, m).all());
      CHECK(commutant_dim(H, m) == 1);
    }
  }
}
