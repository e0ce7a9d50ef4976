#include "ahrg/elliptic.hpp"

#include <doctest.h>

using namespace ahrg;

namespace {

FiniteGroup named(const std::string& name) {
  for (auto& [n, g] : small_groups())
    if (n == name) return g;
  throw std::invalid_argument("no group " + name);
}

MatrixGroup weyl_b2() {
  IntMat s1(2, 2), s2(2, 2);
  // Reflections in e1 - e2 and e2.
  s1(0, 1) = 1, s1(1, 0) = 1;
  s2(0, 0) = 1, s2(1, 1) = -1;
  return MatrixGroup::generate({s1, s2}, 2);
}

RatMat rat(const IntMat& m) {
  RatMat r(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) r(i, j) = m(i, j);
  return r;
}

}  // namespace

TEST_SUITE("elliptic") {
  TEST_CASE("character tables") {
    CHECK(character_table(named("Z2")).degrees == std::vector<int>{1, 1});
    CHECK(character_table(named("S3")).degrees == std::vector<int>{1, 1, 2});
    MatrixGroup b2 = weyl_b2();
    REQUIRE(b2.group.order() == 8);
    CHECK(character_table(b2.group).degrees == std::vector<int>{1, 1, 1, 1, 2});
    for (auto& [name, g] : small_groups()) {
      CAPTURE(name);
      CharacterTable T = character_table(g);
      CHECK(T.size() == g.nclasses());
      CHECK(check_orthogonality(g, T));
      CHECK(tables_agree(T, burnside_table_numeric(g)));
    }
  }

  TEST_CASE("det(1 - g)") {
    IntMat refl(2, 2), minus(2, 2), rot3(2, 2);
    refl(0, 1) = 1, refl(1, 0) = 1;
    minus(0, 0) = -1, minus(1, 1) = -1;
    // Order three on the A2 root lattice.
    rot3(0, 1) = -1, rot3(1, 0) = 1, rot3(1, 1) = -1;
    CHECK(det_one_minus(rat(refl)) == 0);
    CHECK(det_one_minus(rat(minus)) == 4);
    CHECK(det_one_minus(rat(rot3)) == 3);
    auto tr = exterior_traces(rat(minus));
    CHECK(tr == std::vector<Rational>{1, -2, 1});
  }

  TEST_CASE("pairing on Z/2 acting by -1") {
    FiniteGroup g = named("Z2");
    IntMat id(1, 1), neg(1, 1);
    id(0, 0) = 1, neg(0, 0) = -1;
    RealRep V = RealRep::from_int({id, neg});
    REQUIRE(V.is_homomorphism(g));
    CharacterTable T = character_table(g);
    CycMat gram = elliptic_gram(g, V, T);
    CHECK(gram(0, 0) == Cyclotomic(1L));
    CHECK(gram(0, 1) == Cyclotomic(-1L));
    CHECK(gram(1, 1) == Cyclotomic(1L));
    CHECK(gram == elliptic_gram(g, V, T, true));
    CHECK(elliptic_class_count(g, V) == 1);
  }

  TEST_CASE("W(B2) on its reflection representation") {
    MatrixGroup b2 = weyl_b2();
    RealRep V = RealRep::from_int(b2.mats);
    CharacterTable T = character_table(b2.group);
    CycMat gram = elliptic_gram(b2.group, V, T);
    CHECK(is_hermitian(gram));
    CHECK(rational_part(gram).rank() == 2);
    CHECK(elliptic_class_count(b2.group, V) == 2);
    CHECK(gram == elliptic_gram(b2.group, V, T, true));
  }

  TEST_CASE("crossed products") {
    for (auto& [name, g] : small_groups())
      for (const auto& act : group_sets(g, 4)) {
        CrossedProductReport r = crossed_product_iso_check(g, act);
        CAPTURE(name);
        CHECK(r.ok());
      }
    // Z/2 on two points: the invariants of End(C^2) (x) C[Z/2].
    CrossedProductReport r = crossed_product_iso_check(named("Z2"), {{0, 1}, {1, 0}});
    CHECK(r.ok());
    CHECK(r.invariant_dim == 4);
  }

  TEST_CASE("multiplicity spaces carry the dual") {
    for (const char* name : {"Z3", "S3", "Q8"}) {
      FiniteGroup g = named(name);
      CharacterTable T = character_table(g);
      auto dual = dual_characters(T);
      for (int s = 0; s < T.size(); ++s) {
        MoritaReport m = morita_induced_check(g, T, s);
        CAPTURE(name);
        CHECK(m.ok());
        CHECK(m.expected == dual[s]);
        CHECK(m.multiplicity_dim == T.degrees[s]);
      }
    }
  }
}
