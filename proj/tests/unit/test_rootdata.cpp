#include "ahrg/rootdata.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace ahrg;

namespace {

// Roots in simple-root coordinates by closing the simple roots under the
// reflections s_j(b) = b - <b, a_j^vee> a_j, straight from the Cartan matrix.
std::set<IntVec> closure_roots(char family, int n) {
  IntMat A = cartan_matrix(family, n);
  std::set<IntVec> roots;
  std::vector<IntVec> todo;
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    todo.push_back(e);
  }
  while (!todo.empty()) {
    IntVec b = todo.back();
    todo.pop_back();
    if (!roots.insert(b).second) continue;
    for (int j = 0; j < n; ++j) {
      std::int64_t p = 0;
      for (int i = 0; i < n; ++i) p += b[i] * A(i, j);
      IntVec c = b;
      c[j] -= p;
      todo.push_back(c);
    }
  }
  return roots;
}

}  // namespace

TEST_SUITE("rootdata") {
  TEST_CASE("root counts match a closure from the Cartan matrix") {
    const std::vector<std::pair<char, int>> types = {{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'B', 3},
                                                     {'C', 3}, {'D', 4}, {'G', 2}, {'F', 4}};
    for (auto [f, n] : types) {
      std::string label = std::string(1, f) + std::to_string(n);
      for (const char* lat : {"sc", "adjoint"}) {
        RootDatum d = RootDatum::build({label, lat, {}});
        CAPTURE(label);
        CHECK(d.nroots() == (int)closure_roots(f, n).size());
      }
    }
    CHECK(RootDatum::build({"B2", "sc", {}}).nroots() == 8);
  }

  TEST_CASE("root datum axioms") {
    for (const char* type : {"A1", "A2", "B2", "G2", "B3", "C3", "A1xA1", "A1xT1", "A1xB2"})
      for (const char* lat : {"sc", "adjoint"}) {
        RootDatum d = RootDatum::build({type, lat, {}});
        CAPTURE(type);
        CAPTURE(lat);
        CHECK_NOTHROW(d.validate());
        for (int i = 0; i < d.nroots(); ++i) {
          CHECK(dot(d.root(i), d.coroot(i)) == 2);
          IntMat s = d.reflection_X(i);
          for (int j = 0; j < d.nroots(); ++j) CHECK(d.find_root(s * d.root(j)) >= 0);
          // Coefficients in the simple basis have one sign.
          bool pos = false, neg = false;
          for (auto c : d.root_coeffs(i)) pos |= c > 0, neg |= c < 0;
          CHECK(pos != neg);
          // The form on X is invariant under every reflection.
          for (int j = 0; j < d.nroots(); ++j) {
            Rational a = 0, b = 0;
            IntVec x = d.root(j), y = s * d.root(j);
            for (int p = 0; p < d.rank(); ++p)
              for (int q = 0; q < d.rank(); ++q) {
                a += d.form_X()(p, q) * x[p] * x[q];
                b += d.form_X()(p, q) * y[p] * y[q];
              }
            CHECK(a == b);
          }
        }
      }
  }

  TEST_CASE("non-reduced roots") {
    RootDatum sc = RootDatum::build({"A1", "sc", {}});
    CHECK_FALSE(sc.coroot_in_2Y(0));
    CHECK(sc.nonreduced_roots().size() == (size_t)sc.nroots());
    RootDatum ad = RootDatum::build({"A1", "adjoint", {}});
    CHECK(ad.coroot_in_2Y(0));
    auto nr = ad.nonreduced_roots();
    IntVec two = ad.root(0);
    for (auto& x : two) x *= 2;
    CHECK(std::find(nr.begin(), nr.end(), two) != nr.end());
  }

  TEST_CASE("parabolic lattices") {
    RootDatum d = RootDatum::build({"B2", "sc", {}});
    CHECK(parabolic_data(d, {}).upper_rank() == 2);
    CHECK(parabolic_data(d, {0, 1}).upper_rank() == 0);
    // Bourbaki numbering: a1 long, a2 short.
    ParabolicData pl = parabolic_data(d, {0});
    CHECK(pl.upper_rank() == 1);
    CHECK(pl.span_basis.cols == 1);
    // Both quotient lattices are free of rank one, and the coordinate maps are consistent.
    for (int i = 0; i < d.nroots(); ++i) {
      IntVec u = pl.to_upper(d.root(i));
      CHECK(u.size() == 1);
      bool in_P = std::find(pl.roots.begin(), pl.roots.end(), i) != pl.roots.end();
      CHECK((u[0] == 0) == in_P);
    }
  }

  TEST_CASE("minimal overgroups") {
    RootDatum a1 = RootDatum::build({"A1", "sc", {}});
    auto q = minimal_parabolics_containing(a1, parabolic_data(a1, {}));
    REQUIRE(q.size() == 1);
    CHECK(q[0].roots.size() == 2);
    RootDatum b2 = RootDatum::build({"B2", "sc", {}});
    CHECK(minimal_parabolics_containing(b2, parabolic_data(b2, {})).size() == 4);
    // Over P = {short}, every further root direction spans the whole plane: one overgroup.
    auto over = minimal_parabolics_containing(b2, parabolic_data(b2, {1}));
    CHECK(over.size() == 1);
    CHECK(over[0].roots.size() == 8);
  }

  TEST_CASE("position of a datum") {
    RootDatum d = RootDatum::build({"B2", "sc", {}});
    CHECK(classify_position(d, {}, TorusPoint({ratio(1, 3), ratio(1, 2)}, {0, 0})) == DatumPosition::unitary);
    // Exponent functional with value 1 on both simple roots.
    const IntVec& a1 = d.root(d.simple_root(0));
    const IntVec& a2 = d.root(d.simple_root(1));
    RatMat M(2, 2);
    for (int j = 0; j < 2; ++j) M(0, j) = a1[j], M(1, j) = a2[j];
    RatMat inv = M.inverse();
    RatVec lam = {inv(0, 0) + inv(0, 1), inv(1, 0) + inv(1, 1)};
    TorusPoint t({0, 0}, lam);
    CHECK(t.eval(a1).vexp == 1);
    CHECK(t.eval(a2).vexp == 1);
    CHECK(classify_position(d, {}, t) == DatumPosition::positive);
    RatVec mixed = {inv(0, 0) - inv(0, 1), inv(1, 0) - inv(1, 1)};
    CHECK(classify_position(d, {}, TorusPoint({0, 0}, mixed)) == DatumPosition::general);
  }
}
