#include "ahrg/finite_group.hpp"
#include "ahrg/weyl.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace ahrg;

TEST_SUITE("weyl") {
  TEST_CASE("orders against an independent matrix closure") {
    for (const char* type : {"A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA1", "A1xB2"}) {
      RootDatum d = RootDatum::build({type, "sc", {}});
      WeylGroup W(d);
      std::vector<IntMat> gens;
      for (int k = 0; k < d.semisimple_rank(); ++k) gens.push_back(d.reflection_X(d.simple_root(k)));
      CAPTURE(type);
      CHECK(W.order() == MatrixGroup::generate(gens, d.rank()).group.order());
      CHECK(W.length(W.longest()) == d.npos());
      CHECK(W.length(0) == 0);
    }
    CHECK(WeylGroup(RootDatum::build({"A2", "sc", {}})).order() == 6);
    CHECK(WeylGroup(RootDatum::build({"B2", "sc", {}})).length(
              WeylGroup(RootDatum::build({"B2", "sc", {}})).longest()) == 4);
  }

  TEST_CASE("group structure") {
    RootDatum d = RootDatum::build({"B3", "adjoint", {}});
    WeylGroup W(d);
    std::mt19937 rng(5);
    for (int it = 0; it < 300; ++it) {
      int a = (int)(rng() % W.order()), b = (int)(rng() % W.order()), c = (int)(rng() % W.order());
      CHECK(W.mul(W.mul(a, b), c) == W.mul(a, W.mul(b, c)));
      CHECK(W.matrix(W.mul(a, b)) == W.matrix(a) * W.matrix(b));
      CHECK(W.mul(a, W.inverse(a)) == 0);
    }
  }

  TEST_CASE("coset representatives") {
    RootDatum d = RootDatum::build({"A2", "sc", {}});
    WeylGroup W(d);
    CHECK(W.coset_reps({0, 1}) == std::vector<int>{0});
    CHECK((int)W.coset_reps({}).size() == W.order());
    auto reps = W.coset_reps({0});
    REQUIRE(reps.size() == 3);
    std::multiset<int> lens;
    for (int w : reps) lens.insert(W.length(w));
    CHECK(lens == std::multiset<int>{0, 1, 2});
  }

  TEST_CASE("K_P groups") {
    RootDatum a1 = RootDatum::build({"A1", "sc", {}});
    CHECK(kp_group(a1, parabolic_data(a1, {})).elements.size() == 1);
    CHECK(kp_group(a1, parabolic_data(a1, {0})).elements.size() == 1);
    RootDatum a3 = RootDatum::build({"A3", "sc", {}});
    KGroup K = kp_group(a3, parabolic_data(a3, {0, 2}));
    CHECK(K.elements.size() == 2);
    CHECK(K.elements[0].is_identity());
  }

  TEST_CASE("groupoid arrows") {
    RootDatum a2 = RootDatum::build({"A2", "sc", {}});
    WeylGroup W2(a2);
    CHECK(W2.mapping({0}, {1}).size() == 1);

    RootDatum a3 = RootDatum::build({"A3", "sc", {}});
    WeylGroup W(a3);
    Groupoid G(W, {0, 2});
    const auto& arrows = G.self_arrows();
    REQUIRE(arrows.size() > 2);
    Arrow id{0, 0};
    std::mt19937 rng(11);
    for (int it = 0; it < 1000; ++it) {
      const Arrow& a = arrows[rng() % arrows.size()];
      const Arrow& b = arrows[rng() % arrows.size()];
      const Arrow& c = arrows[rng() % arrows.size()];
      CHECK(G.equal(G.compose(G.compose(a, b), c), G.compose(a, G.compose(b, c))));
      if (it < 100) {
        CHECK(G.equal(G.compose(id, a), a));
        CHECK(G.equal(G.compose(a, id), a));
        CHECK(G.is_identity(G.compose(a, G.inverse(a))));
      }
    }
  }

  TEST_CASE("stabilizers of points") {
    auto all = [](const Arrow&) { return true; };
    RootDatum a2 = RootDatum::build({"A2", "sc", {}});
    WeylGroup W(a2);
    Groupoid G(W, {});
    CHECK((int)stabilizer(G, TorusPoint(2), all).size() == W.order());
    CHECK(stabilizer(G, TorusPoint({ratio(1, 7), ratio(3, 7)}, {0, 0}), all).size() == 1);
    RootDatum a1 = RootDatum::build({"A1", "adjoint", {}});
    WeylGroup W1(a1);
    Groupoid G1(W1, {});
    CHECK(stabilizer(G1, TorusPoint({ratio(1, 2)}, {0}), all).size() == 2);
  }
}
