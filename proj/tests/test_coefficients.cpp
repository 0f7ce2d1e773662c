#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"

#include "c2coh/cli.hpp"
#include "c2coh/coefficients.hpp"
#include "c2coh/errors.hpp"
#include "c2coh/expression.hpp"

using namespace c2coh;

namespace {

CoeffElem pos(int a, int u) { return CoeffElem(CoeffMono::pos(a, u)); }
CoeffElem th(int i, int j) { return CoeffElem(CoeffMono::neg(i, j)); }

}  // namespace

TEST_SUITE("coefficients") {
  TEST_CASE("products") {
    CHECK(pos(2, 0) * pos(0, 3) == pos(2, 3));
    CHECK((pos(0, 1) * th(0, 2)).is_zero());
    CHECK((th(0, 2) * th(0, 2)).is_zero());
    CHECK(pos(1, 0) * th(1, 2) == th(0, 2));
    CHECK(pos(0, 1) * th(0, 3) == th(0, 2));
    CHECK((pos(1, 0) * th(0, 2)).is_zero());
    CHECK(CoeffElem::one() * th(3, 4) == th(3, 4));
  }

  TEST_CASE("degrees") {
    CHECK(CoeffMono::pos(1, 0).degree() == RODegree{0, 1});
    CHECK(CoeffMono::pos(0, 1).degree() == RODegree{-1, 1});
    CHECK(CoeffMono::neg(0, 2).degree() == RODegree{2, -2});
    CHECK(CoeffMono::neg(1, 2).degree() == RODegree{2, -3});
    CHECK_FALSE(CoeffMono::neg(0, 1).valid_in_hf());
    CHECK_THROWS(CoeffElem::from_terms({CoeffMono::neg(0, 1)}));
    CHECK_FALSE((pos(1, 0) + pos(0, 1)).is_homogeneous());
  }

  TEST_CASE("chart examples") {
    CHECK(chart_shape({0, 0}) == Shape::fbar);
    CHECK(chart_shape({0, 1}) == Shape::dot);
    CHECK(chart_shape({2, -2}) == Shape::l);
    CHECK(chart_shape({3, 0}) == Shape::zero);
    CHECK(chart_shape({-1, 1}) == Shape::fbar);
    CHECK(chart_shape({1, 0}) == Shape::zero);
    CHECK(chart_shape({0, -10}) == Shape::zero);
    CHECK(chart_lookup({0, 0}).tag == Shape::fbar);
  }

  TEST_CASE("chart matches the picture and the monomial count") {
    for (int p = -20; p <= 20; ++p)
      for (int q = -20; q <= 20; ++q) {
        CHECK(shape_token(chart_shape({p, q})) == oracle::chart_token(p, q));
        int count = 0;
        for (int i = 0; i <= 60; ++i)
          for (int j = 0; j <= 60; ++j) {
            count += CoeffMono::pos(i, j).degree() == RODegree{p, q};
            if (j >= 2) count += CoeffMono::neg(i, j).degree() == RODegree{p, q};
          }
        CHECK(count == (oracle::chart_token(p, q) == "0" ? 0 : 1));
      }
  }

  TEST_CASE("Lewis diagrams") {
    auto check = [](Shape s, std::size_t top, std::size_t bottom) {
      auto m = MackeyShape::make(s);
      CHECK(m.top_dim() == top);
      CHECK(m.bottom_dim() == bottom);
      CHECK(m.satisfies_relations());
    };
    check(Shape::zero, 0, 0);
    check(Shape::dot, 1, 0);
    check(Shape::fbar, 1, 1);
    check(Shape::l, 1, 1);
    check(Shape::l_minus, 0, 1);
    auto fbar = MackeyShape::make(Shape::fbar), l = MackeyShape::make(Shape::l);
    CHECK(fbar.restriction.get(0, 0));
    CHECK_FALSE(fbar.transfer.get(0, 0));
    CHECK_FALSE(l.restriction.get(0, 0));
    CHECK(l.transfer.get(0, 0));
  }

  TEST_CASE("restriction") {
    CHECK(restriction(pos(0, 3)) == 3);
    CHECK_FALSE(restriction(pos(1, 1)).has_value());
    CHECK_FALSE(restriction(th(0, 2)).has_value());
  }

  TEST_CASE("geometric shadow") {
    auto s = phi_shadow(pos(3, 0));
    CHECK(bool(pr(s, 0)));
    CHECK_FALSE(bool(pr(s, 1)));
    CHECK(bool(pr(phi_shadow(pos(2, 1)), 1)));
    CHECK(phi_shadow(th(0, 2)).is_zero());
  }

  TEST_CASE("Laurent rings") {
    auto t1 = CoefficientRing::truncated(1), t2 = CoefficientRing::truncated(2);
    CHECK(t1.basis({3, -3}) == CoeffMono::pos(0, -3));
    CHECK_FALSE(t1.basis({3, -2}).has_value());
    CHECK(t2.basis({3, -2}) == CoeffMono::pos(1, -3));
    CHECK_FALSE(t2.basis({3, -1}).has_value());
    CHECK(CoefficientRing::borel().basis({3, 2}) == CoeffMono::pos(5, -3));
    CHECK_FALSE(CoefficientRing::borel().admits(CoeffMono::pos(-1, 0)));
    CHECK(CoefficientRing::geometric().admits(CoeffMono::pos(-4, 2)));
    CHECK_FALSE(CoefficientRing::hf().admits(CoeffMono::pos(0, -1)));
  }

  TEST_CASE("tensor with trivial cohomology") {
    GradedVector pt(0);
    pt.add(0, "1");
    auto hf = GradedFreeModule::ring_itself(CoefficientRing::hf());
    auto same = tensor_with_trivial(hf, pt);
    for (int p = -4; p <= 4; ++p)
      for (int q = -4; q <= 4; ++q) CHECK(same.dim({p, q}) == hf.dim({p, q}));
    GradedVector s1(1);
    s1.add(0, "1");
    s1.add(1, "s1");
    auto m = tensor_with_trivial(hf, s1);
    auto b = m.basis({0, 1});  // -1+al+1
    REQUIRE(b.size() == 2);
    CHECK(b[0] == ModuleBasisElement{CoeffMono::pos(1, 0), "1"});
    CHECK(b[1] == ModuleBasisElement{CoeffMono::pos(0, 1), "s1"});
  }

  TEST_CASE("free module degrees") {
    GradedFreeModule f(CoefficientRing::hf(), {{"x", RODegree::diagonal(1)}});
    CHECK(f.basis({1, 1}) == std::vector<ModuleBasisElement>{{CoeffMono::pos(0, 0), "x"}});
    CHECK(f.basis({2, 1}).empty());
    CHECK(f.basis({1, 2}) == std::vector<ModuleBasisElement>{{CoeffMono::pos(1, 0), "x"}});
  }

  TEST_CASE("coefficient grammar") {
    CHECK(parse_coefficient("a^2*u^3") == pos(2, 3));
    CHECK(parse_coefficient("a*th[1,2]") == th(0, 2));
    CHECK(parse_coefficient("u + u") == CoeffElem{});
    CHECK(to_string(parse_coefficient("th[0,2] + a")) == to_string(pos(1, 0) + th(0, 2)));
    CHECK_THROWS_AS(parse_coefficient("th[0,1]"), ParseError);
    CHECK_THROWS_AS(parse_coefficient("a^"), ParseError);
    CHECK_THROWS_AS(parse_coefficient("b"), ParseError);
  }

  TEST_CASE("chart csv") {
    auto csv = emit_chart_csv(-3, 3, -3, 3);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 49);
    CHECK(csv.rfind("-3,3,Fbar\n-3,2,0\n", 0) == 0);
    CHECK(csv.find("0,0,Fbar\n") != std::string::npos);
    CHECK(csv.find("2,-2,L\n") != std::string::npos);
    CHECK(csv.find("1,0,0\n") != std::string::npos);
  }
}
