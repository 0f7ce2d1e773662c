#include "doctest.h"

#include "c2coh/errors.hpp"
#include "c2coh/grading.hpp"

using namespace c2coh;

TEST_SUITE("grading") {
  TEST_CASE("dimension and diagonal") {
    CHECK(dimension({3, 3}) == 6);
    CHECK(RODegree::diagonal(2) == RODegree{2, 2});
    CHECK(is_diagonal({4, 4}));
    CHECK_FALSE(is_diagonal({4, 3}));
    CHECK(deg_add({1, 2}, {3, -4}) == RODegree{4, -2});
    CHECK(2 * RODegree{1, -1} == RODegree{2, -2});
  }

  TEST_CASE("conventions") {
    RODegree d{1, -2};
    CHECK(convert(d, Grading::homological, Grading::cohomological) == RODegree{-1, 2});
    CHECK(convert(d, Grading::homological, Grading::homological) == d);
  }

  TEST_CASE("text form") {
    CHECK(to_string({3, 3}) == "3+3*al");
    CHECK(to_string({-1, 1}) == "-1+1*al");
    CHECK(to_string({2, -1}) == "2-1*al");
    CHECK(parse_degree("-1+1*al") == RODegree{-1, 1});
    CHECK(parse_degree("3+3*al") == RODegree{3, 3});
    CHECK(parse_degree("al") == RODegree{0, 1});
    CHECK(parse_degree("2") == RODegree{2, 0});
    CHECK(parse_degree("-al+4") == RODegree{4, -1});
    for (int p = -6; p <= 6; ++p)
      for (int q = -6; q <= 6; ++q) CHECK(parse_degree(to_string({p, q})) == RODegree{p, q});
  }

  TEST_CASE("parse errors name the position") {
    try {
      parse_degree("1+x*al");
      FAIL("no throw");
    } catch (const ParseError& e) {
      CHECK(e.position() == 2);
      CHECK(e.token() == "x");
    }
    CHECK_THROWS_AS(parse_degree(""), ParseError);
    CHECK_THROWS_AS(parse_degree("1+"), ParseError);
  }
}
