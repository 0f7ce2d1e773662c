#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "c2coh/expression.hpp"
#include "c2coh/gf2.hpp"

using namespace c2coh;

TEST_SUITE("gf2") {
  TEST_CASE("Lucas parity matches Pascal table") {
    for (int n = 0; n <= 200; ++n)
      for (int k = 0; k <= n; ++k) CHECK(bool(binom_mod2(n, k)) == oracle::binom_odd(n, k));
    CHECK(bool(binom_mod2(5, 2)) == false);
    CHECK(bool(binom_mod2(7, 3)) == true);
  }

  TEST_CASE("bit arithmetic") {
    Bit one{true}, zero{};
    CHECK((one + one) == zero);
    CHECK((one * one) == one);
    CHECK((one * zero) == zero);
  }

  TEST_CASE("polynomial addition cancels in pairs") {
    auto x = Monomial::generator(0), y = Monomial::generator(1);
    auto p = Polynomial::from_terms({x, y, x});
    CHECK(p == Polynomial(y));
    CHECK((p + p).is_zero());
    auto sq = (Polynomial(x) + Polynomial(y)) * (Polynomial(x) + Polynomial(y));
    CHECK(sq == Polynomial::from_terms({x * x, y * y}));
  }

  TEST_CASE("monomial operations") {
    auto m = Monomial::generator(0, 2) * Monomial::generator(3);
    CHECK(m.exponent(0) == 2);
    CHECK(m.exponent(3) == 1);
    CHECK(m.exponent(1) == 0);
    CHECK(m.total_exponent() == 3);
    CHECK(Monomial::generator(0).divides(m));
    CHECK_FALSE(Monomial::generator(1).divides(m));
    std::vector<int> w{2, 0, 0, 5};
    CHECK(m.weighted_degree(w) == 9);
  }

  TEST_CASE("parse_polynomial") {
    auto lookup = [](std::string_view s) -> std::optional<GenId> {
      if (s == "x") return 0;
      if (s == "y") return 1;
      return std::nullopt;
    };
    CHECK(parse_polynomial("(x+y)^2", lookup) == parse_polynomial("x^2+y^2", lookup));
    CHECK(parse_polynomial("x*y + y*x", lookup).is_zero());
    CHECK(parse_polynomial("1", lookup) == Polynomial::one());
    CHECK_THROWS(parse_polynomial("x + z", lookup));
    CHECK_THROWS(parse_polynomial("x +", lookup));
    CHECK_THROWS(parse_polynomial("2*x", lookup));
  }

  TEST_CASE("rank agrees with plain elimination") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 300; ++t) {
      std::size_t r = 1 + rng() % 10, c = 1 + rng() % 10;
      BitMatrix m(r, c);
      std::vector<std::vector<int>> rows(r, std::vector<int>(c, 0));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
          if (rng() % 3 == 0) {
            m.set(i, j);
            rows[i][j] = 1;
          }
      CHECK(rank_gf2(m) == oracle::rank(rows));
    }
  }

  TEST_CASE("matrix product and identity") {
    BitMatrix m(2, 3);
    m.set(0, 1);
    m.set(1, 2);
    CHECK(BitMatrix::identity(2) * m == m);
    CHECK(m * BitMatrix::identity(3) == m);
    CHECK((m + m) == BitMatrix(2, 3));
  }

  TEST_CASE("echelon basis tracks combinations") {
    EchelonBasis e(4, 3);
    auto vec = [](std::initializer_list<int> bits) {
      BitVector v(4);
      for (int b : bits) v.set(static_cast<std::size_t>(b));
      return v;
    };
    auto tag = [](int i) {
      BitVector t(3);
      t.set(static_cast<std::size_t>(i));
      return t;
    };
    CHECK(e.insert(vec({0, 1}), tag(0)));
    CHECK(e.insert(vec({1, 2}), tag(1)));
    CHECK_FALSE(e.insert(vec({0, 2}), tag(2)));
    CHECK(e.rank() == 2);
    auto r = e.reduce(vec({0, 2}), BitVector(3));
    CHECK_FALSE(r.residual.any());
    CHECK(r.tag.get(0));
    CHECK(r.tag.get(1));
    CHECK(e.contains(vec({0, 2})));
    CHECK_FALSE(e.contains(vec({3})));
  }

  TEST_CASE("graded vector") {
    GradedVector v(3);
    v.add(0, "1");
    v.add(2, "x");
    v.add(2, "y");
    CHECK(v.dim(2) == 2);
    CHECK(v.dim(1) == 0);
    CHECK(v.degrees() == std::vector<int>{0, 2});
    CHECK_THROWS(v.add(4, "z"));
    CHECK_THROWS(v.add(2, "x"));
  }
}
