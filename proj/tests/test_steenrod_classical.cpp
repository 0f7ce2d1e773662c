#include "doctest.h"
#include "oracles.hpp"

#include "c2coh/errors.hpp"
#include "c2coh/models.hpp"
#include "c2coh/steinberg.hpp"
#include "c2coh/unstable_algebra.hpp"

using namespace c2coh;

namespace {

std::set<std::pair<int, int>> as_set(const BPolynomial& y) {
  std::set<std::pair<int, int>> out;
  for (const auto& t : y.terms()) out.insert({t.b, static_cast<int>(t.m.exponent(0))});
  return out;
}

}  // namespace

TEST_SUITE("steenrod_classical") {
  TEST_CASE("squares on F[t], |t| = 1") {
    UnstableAlgebra f({{"t", 1}}, {}, {}, 40);
    auto t = f.generator("t");
    for (int n = 0; n <= 20; ++n)
      for (int i = 0; i <= n; ++i) {
        Polynomial want = oracle::binom_odd(n, i) ? f.power(t, n + i) : Polynomial{};
        CHECK(f.sq(i, f.power(t, n)) == want);
      }
    CHECK(f.total_sq(t) == t + f.power(t, 2));
    CHECK(f.total_sq(Polynomial::one()) == Polynomial::one());
  }

  TEST_CASE("squares on CP^n") {
    auto cp = UnstableAlgebra::truncated_polynomial("x", 2, 4, 10);
    auto x = cp.generator("x");
    CHECK(cp.sq(1, x).is_zero());
    CHECK(cp.sq(2, x) == cp.power(x, 2));
    CHECK(cp.sq(2, cp.power(x, 2)).is_zero());
    CHECK(cp.sq(4, cp.power(x, 2)) == cp.power(x, 4));
  }

  TEST_CASE("total square is multiplicative") {
    UnstableAlgebra f({{"t1", 1}, {"t2", 1}, {"y", 2}}, {}, {}, 14);
    auto t1 = f.generator("t1"), t2 = f.generator("t2"), y = f.generator("y");
    for (const auto& x : {t1, t1 + t2, f.multiply(t1, y), f.power(t2, 3)})
      for (const auto& z : {t2, y, f.multiply(t1, t2)})
        CHECK(f.total_sq(f.multiply(x, z)) == f.multiply(f.total_sq(x), f.total_sq(z)));
  }

  TEST_CASE("unstable algebra validation") {
    CHECK_THROWS(UnstableAlgebra({{"t", 0}}, {}, {}, 4));
    CHECK_THROWS(UnstableAlgebra({{"t", 1}, {"t", 1}}, {}, {}, 4));
    CHECK_THROWS(UnstableAlgebra({{"b", 1}}, {}, {}, 4));
    // Sq^1 t must be t^2 for |t| = 1
    SqTable bad;
    bad[0][1] = Polynomial{};
    CHECK_THROWS(UnstableAlgebra({{"t", 1}}, {}, bad, 4));
    // relation t^2 + t^3 is not homogeneous
    auto t2 = Polynomial(Monomial::generator(0, 2)), t3 = Polynomial(Monomial::generator(0, 3));
    CHECK_THROWS(UnstableAlgebra({{"t", 1}}, {t2 + t3}, {}, 4));
    // (t^2) with |t| = 1 is closed
    CHECK_NOTHROW(UnstableAlgebra({{"t", 1}}, {t2}, {}, 4));
  }

  TEST_CASE("a non closed ideal is rejected") {
    // Sq^1 s = ts makes (t^2 + s) not closed
    auto t = Monomial::generator(0), s = Monomial::generator(1);
    auto rel = Polynomial(t * t) + Polynomial(s);
    SqTable sq;
    sq[1][1] = Polynomial(t * s);
    CHECK_THROWS(UnstableAlgebra({{"t", 1}, {"s", 2}}, {rel}, sq, 6));
  }

  TEST_CASE("bases and overflow") {
    auto rp = rp_algebra(3);
    CHECK(rp.poincare_series(5) == std::vector<int>{1, 1, 1, 1, 0, 0});
    CHECK(rp.is_complete());
    UnstableAlgebra f({{"t", 1}}, {}, {}, 5);
    CHECK_FALSE(f.is_complete());
    CHECK_THROWS_AS(f.basis(6), DegreeOverflow);
    CHECK(f.format(f.parse("t*t + t^2 + t")) == "t");
  }

  TEST_CASE("Steinberg examples") {
    auto pt = UnstableAlgebra::point(4);
    CHECK(format(pt, steinberg(pt, Polynomial::one())) == "1");
    auto s1 = rp_algebra(1);
    CHECK(format(s1, steinberg(s1, s1.generator("t"))) == "b*t");
    auto rp2 = rp_algebra(2);
    CHECK(format(rp2, steinberg(rp2, rp2.generator("t"))) == "b*t + t^2");
    for (int n = 1; n <= 7; ++n) {
      auto rp = rp_algebra(n);
      for (int k = 0; k <= n; ++k)
        CHECK(as_set(steinberg(rp, rp.power(rp.generator("t"), k))) == oracle::steinberg_rp(n, k));
    }
  }

  TEST_CASE("Steinberg map is injective") {
    for (int n = 1; n <= 6; ++n) {
      auto rp = rp_algebra(n);
      for (int d = 0; d <= n; ++d) CHECK(steinberg_rank(rp, d) == static_cast<std::size_t>(rp.dim(d)));
    }
  }

  TEST_CASE("doubling and Sq_0") {
    auto rp = std::make_shared<const UnstableAlgebra>(rp_algebra(2));
    DoubledModule phi(rp);
    auto t = rp->generator("t");
    CHECK(phi.dim(2) == 1);
    CHECK(phi.dim(1) == 0);
    CHECK(phi.degree(t) == 2);
    CHECK(phi.sq(2, t) == rp->sq(1, t));
    CHECK(phi.sq(1, t).is_zero());
    CHECK(sq0(*rp, t) == rp->power(t, 2));
  }

  TEST_CASE("R functor series against brute force") {
    auto pt = UnstableAlgebra::point(0);
    RModule rpt(pt, 6);
    CHECK(rpt.poincare_series() == std::vector<int>(7, 1));
    for (int n = 1; n <= 6; ++n) {
      RModule R(rp_algebra(n), 12);
      CHECK(R.poincare_series() == oracle::r_series_rp(n, 12));
    }
    // H(RP^1): b^k and b^k St(t) span two classes from degree 2 on
    CHECK(RModule(rp_algebra(1), 6).poincare_series() == std::vector<int>{1, 1, 2, 2, 2, 2, 2});
    RModule R2(rp_algebra(2), 8);
    CHECK(R2.poincare_series() == std::vector<int>{1, 1, 2, 2, 3, 3, 3, 3, 3});
  }

  TEST_CASE("rho_1 picks the b^0 generator part") {
    auto rp = rp_algebra(3);
    RModule R(rp, 6);
    auto t = rp.generator("t");
    auto st = steinberg(rp, t);
    CHECK(R.rho1(st) == t);
    CHECK(R.rho1(b_times(st, 2)).is_zero());
    CHECK(R.rho1(st + b_times(steinberg(rp, Polynomial::one()), 2)) == t);
    CHECK_FALSE(R.contains(BPolynomial::from_coefficient(t, 0)));
    CHECK_THROWS(R.rho1(BPolynomial::from_coefficient(t, 0)));
  }

  TEST_CASE("Adem spot checks") {
    auto r = adem_spotcheck();
    CHECK(r.ok);
    CHECK(r.checked > 0);
    UnstableAlgebra f({{"t1", 1}, {"t2", 1}, {"t3", 1}}, {}, {}, 12);
    auto t1 = f.generator("t1");
    auto x = f.multiply(f.multiply(t1, f.generator("t2")), f.generator("t3"));
    CHECK(f.sq(1, f.sq(2, x)) == f.sq(3, x));
    CHECK(f.sq(1, f.sq(1, t1)).is_zero());
    auto t1sq = f.power(t1, 2);
    CHECK(f.sq(2, f.sq(2, t1sq)) == f.sq(3, f.sq(1, t1sq)));
  }
}
