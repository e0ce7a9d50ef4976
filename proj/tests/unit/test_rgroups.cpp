#include "ahrg/rgroups.hpp"
#include "ahrg/suites.hpp"

#include <doctest.h>

using namespace ahrg;

namespace {

const PhaseMonomial kOne(0, 0);

struct Setup {
  RootDatum d;
  WeylGroup W;
  Parameters q;
  Groupoid G;
  HeckeAlgebra H;
  Setup(const CartanSpec& spec, const std::vector<int>& P, const VMode& mode = VMode::numeric(2),
        const std::map<int, Rational>& half = {})
      : d(RootDatum::build(spec)), W(d), q(d, mode, {}, half), G(W, P), H(W, q) {}
  std::vector<SpectralDatum> deltas() const { return one_dim_reps(H, G.parabolic()); }
};

}  // namespace

TEST_SUITE("rgroups") {
  TEST_CASE("c-function values") {
    RootDatum d = RootDatum::build({"A1", "sc", {}});
    Parameters trivial(d, VMode{}, {}, {}, 0, 0);
    CHECK(c_alpha(trivial, 0, kOne, 1) == RatFun::constant(kOne));
    CHECK(c_alpha(trivial, 0, PhaseMonomial(ratio(1, 3), 0), 2) == RatFun::constant(kOne));

    // (1 - q^{-1} theta_{-alpha}) / (1 - theta_{-alpha}) when alpha^vee is not in 2Y.
    Parameters q = Parameters::equal(d, VMode{});
    PhaseMonomial ra(ratio(1, 4), 1);
    RatFun expect = RatFun::one_minus(PhaseMonomial(0, -2) * ra.inverse(), -2) / RatFun::one_minus(ra.inverse(), -2);
    CHECK(c_alpha(q, 0, ra, 2) == expect);

    RatFun sl2 = c_alpha(q, 0, kOne, 1);
    CHECK(sl2.pole_order(kOne) == 1);
    CHECK(sl2.unitary_poles() == std::map<PhaseMonomial, long>{{kOne, 1}});
    CHECK(sl2.pole_order(PhaseMonomial(0, -2)) == -1);
  }

  TEST_CASE("coset function of the principal series on SL2") {
    Setup s({"A1", "sc", {}}, {}, VMode{});
    auto mins = minimal_parabolics_containing(s.d, s.G.parabolic());
    REQUIRE(mins.size() == 1);
    CosetFunction cf = cQP_on_coset(s.W, s.q, s.G.parabolic(), s.deltas()[0], mins[0]);
    CHECK(cf.gamma == IntVec{1});
    // gamma is the fundamental weight, so t(alpha) = z^2.
    CHECK(cf.c == c_alpha(s.q, mins[0].alpha_Q, kOne, 2));
  }

  TEST_CASE("mirrors") {
    {
      Setup s({"A1", "sc", {}}, {}, VMode{});
      Parameters trivial(s.d, VMode{}, {}, {}, 0, 0);
      CHECK(mirrors(s.W, trivial, s.G.parabolic(), s.deltas()[0]).mirrors.empty());
      // z = +-1 on the weight coordinate, both over t(alpha) = 1.
      CHECK(mirrors(s.W, s.q, s.G.parabolic(), s.deltas()[0]).mirrors.size() == 2);
    }
    {
      Setup s({"A1", "adjoint", {}}, {}, VMode{});
      auto ms = mirrors(s.W, s.q, s.G.parabolic(), s.deltas()[0]).mirrors;
      REQUIRE(ms.size() == 1);
      CHECK(ms[0].z0 == kOne);
    }
    {
      Setup s({"A1", "adjoint", {}}, {}, VMode{}, {{0, 1}});
      auto ms = mirrors(s.W, s.q, s.G.parabolic(), s.deltas()[0]).mirrors;
      REQUIRE(ms.size() == 2);
      CHECK(ms[0].z0 == kOne);
      CHECK(ms[1].z0 == PhaseMonomial(ratio(1, 2), 0));
    }
  }

  TEST_CASE("reflections in mirrors") {
    Setup s({"B2", "sc", {}}, {1});
    const ParabolicData& pd = s.G.parabolic();
    for (const SpectralDatum& sd : s.deltas()) {
      if (sd.name.rfind("St", 0) != 0) continue;
      CosetFunction cf = cQP_on_coset(s.W, s.q, pd, sd, minimal_parabolics_containing(s.d, pd)[0]);
      CHECK(cf.c.denominator_degree() <= 3);
      MirrorSet ms = mirrors(s.W, s.q, pd, sd);
      for (const Mirror& M : ms.mirrors) {
        Arrow a = reflection_for_mirror(s.G, sd, M);
        CHECK(s.G.is_identity(s.G.compose(a, a)));
        CHECK(delta_invariant(s.G, sd, a));
        int on = 0;
        for (const TorusPoint& t : torsion_points(pd, s.d.rank(), 4))
          if (M.contains(pd, t)) {
            ++on;
            CHECK(s.G.act(a, t) == t);
          }
        CHECK(on > 0);
      }
    }
  }

  TEST_CASE("R-groups in rank one") {
    AnchorResult neg = rank_one_anchor("adjoint", ratio(1, 2));
    CHECK(neg.stabilizer == 2);
    CHECK(neg.mirrors == 0);
    CHECK(neg.rgroup == 2);
    AnchorResult one = rank_one_anchor("adjoint", 0);
    CHECK(one.stabilizer == 2);
    CHECK(one.mirrors == 1);
    CHECK(one.rgroup == 1);
    AnchorResult sc = rank_one_anchor("sc", ratio(1, 2));
    CHECK(sc.stabilizer == 1);
    CHECK(sc.rgroup == 1);
  }

  TEST_CASE("decomposition of stabilizers") {
    for (const char* lat : {"sc", "adjoint"}) {
      Setup s({"B2", lat, {}}, {});
      for (const TorusPoint& t : torsion_points(s.G.parabolic(), 2, 2)) {
        RGroupData R = rgroup(s.G, s.q, InductionDatum{{}, s.deltas()[0], t});
        CAPTURE(t.str());
        CHECK(R.ok());
        CHECK(R.stabilizer.size() == R.rgroup.size() * R.weyl_R.size());
        CHECK(R.reflections.size() == R.mirrors_xi.size());
      }
    }
  }

  TEST_CASE("non-tempered construction agrees on unitary points") {
    Setup s({"B2", "adjoint", {}}, {});
    for (const TorusPoint& t : torsion_points(s.G.parabolic(), 2, 2)) {
      InductionDatum xi{{}, s.deltas()[0], t};
      RGroupData a = rgroup(s.G, s.q, xi), b = rgroup_nontempered(s.G, s.q, xi);
      CHECK(a.stabilizer.size() == b.stabilizer.size());
      CHECK(a.rgroup.size() == b.rgroup.size());
      CHECK(a.mirrors_xi.size() == b.mirrors_xi.size());
      CHECK(b.mirror_rules_agree);
    }
  }
}
