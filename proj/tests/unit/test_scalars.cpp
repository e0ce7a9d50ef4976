#include "ahrg/ratfun.hpp"
#include "ahrg/torus.hpp"

#include <doctest.h>

#include <complex>
#include <random>

using namespace ahrg;

TEST_SUITE("scalars") {
  TEST_CASE("two-argument rationals are reduced") {
    CHECK(ratio(6, 2) == Rational(3));
    CHECK(Cyclotomic(ratio(6, 2)) == Cyclotomic(3L));
    CHECK(ratio(-4, 6) == parse_rational("-2/3"));
  }

  TEST_CASE("roots of unity") {
    CHECK(Cyclotomic::zeta(4) * Cyclotomic::zeta(4) == Cyclotomic(-1L));
    CHECK((Cyclotomic(1L) + Cyclotomic::zeta(3) + Cyclotomic::zeta(3, 2)).is_zero());
    CHECK(Cyclotomic::zeta(8).conj() * Cyclotomic::zeta(8) == Cyclotomic(1L));
    CHECK(Cyclotomic::zeta(6, 3).is_rational());
    CHECK(Cyclotomic::root_of_unity(ratio(1, 4)) == Cyclotomic::zeta(4));
  }

  TEST_CASE("field operations agree with complex arithmetic") {
    std::mt19937 rng(7);
    for (int it = 0; it < 200; ++it) {
      long n = 1 + (long)(rng() % 12);
      Cyclotomic a, b;
      for (long k = 0; k < n; ++k) {
        a += Cyclotomic((long)(rng() % 5) - 2) * Cyclotomic::zeta(n, k);
        b += Cyclotomic((long)(rng() % 5) - 2) * Cyclotomic::zeta(n + 1, k);
      }
      std::complex<double> za = a.to_complex(), zb = b.to_complex();
      CHECK(std::abs((a * b).to_complex() - za * zb) < 1e-9);
      CHECK(std::abs((a + b).to_complex() - (za + zb)) < 1e-9);
      CHECK(std::abs(a.conj().to_complex() - std::conj(za)) < 1e-9);
      if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic(1L));
    }
  }

  TEST_CASE("torus point evaluation") {
    TorusPoint one(1);
    for (long x : {-3L, 0L, 1L, 5L}) CHECK(one.eval({x}) == PhaseMonomial(0, 0));
    TorusPoint minus({ratio(1, 2)}, {0});
    CHECK(minus.value({1}, VMode{}) == QPower(-1));
    TorusPoint mixed({ratio(1, 4)}, {2});
    CHECK(mixed.value({1}, VMode{}) == QPower(Cyclotomic::zeta(4)) * QPower::vpow(2, VMode{}));
    CHECK(mixed.value({1}, VMode::numeric(2)) == QPower(Cyclotomic::zeta(4) * Cyclotomic(4L)));
    CHECK(minus.is_unitary());
    CHECK_FALSE(mixed.is_unitary());
  }

  TEST_CASE("pole orders after cancellation") {
    const PhaseMonomial one(0, 0), minus(ratio(1, 2), 0);
    // (1 - z^2) / (1 - z) = 1 + z: regular at 1, a simple zero at -1.
    RatFun f = RatFun::one_minus(one, 2) / RatFun::one_minus(one, 1);
    CHECK(f.pole_order(one) == 0);
    CHECK(f.pole_order(minus) == -1);
    CHECK(f == RatFun::one_plus(one, 1));
    RatFun g = RatFun::constant(one) / (RatFun::one_minus(one, 1) * RatFun::one_minus(one, 1));
    CHECK(g.pole_order(one) == 2);
    CHECK(g.unitary_poles() == std::map<PhaseMonomial, long>{{one, 2}});
  }

  TEST_CASE("rational functions form a group under multiplication") {
    std::mt19937 rng(3);
    for (int it = 0; it < 100; ++it) {
      auto rnd = [&] {
        RatFun f = RatFun::constant(PhaseMonomial(ratio((long)(rng() % 6), 6), (long)(rng() % 3) - 1));
        for (int k = 0; k < 3; ++k) {
          PhaseMonomial c(ratio((long)(rng() % 4), 4), (long)(rng() % 3) - 1);
          long e = (long)(rng() % 5) - 2;
          if (e == 0) e = 1;
          f = rng() % 2 ? f * RatFun::one_minus(c, e) : f / RatFun::one_plus(c, e);
        }
        return f;
      };
      RatFun a = rnd(), b = rnd();
      CHECK((a * b) / b == a);
      CHECK(a * b == b * a);
    }
  }
}
