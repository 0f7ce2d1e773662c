#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"

#include "c2coh/coefficient_action.hpp"
#include "c2coh/models.hpp"

using namespace c2coh;

namespace {

CoeffElem mono(int a, int u) { return CoeffElem(CoeffMono::pos(a, u)); }

}  // namespace

TEST_SUITE("coefficient_action") {
  TEST_CASE("values on u^k") {
    CHECK(act_on_coefficient({0, true}, 1) == mono(1, 0));
    CHECK(act_on_coefficient({0, false}, 5) == mono(0, 5));
    CHECK(reduce_mod_u(act_on_coefficient({1, false}, 2)).is_zero());
    CHECK(reduce_mod_u(act_on_coefficient({1, true}, 2)) == mono(3, 0));
  }

  TEST_CASE("recursion against eta_R(u)^k in the quotient ring") {
    for (int k = 0; k <= 12; ++k) {
      auto mini = oracle::mini_pow(oracle::eta_u(), k);
      for (int l = 0; l <= 12; ++l)
        for (int e = 0; e <= 1; ++e)
          CHECK(oracle::to_set(act_on_coefficient({l, e == 1}, k)) ==
                oracle::mini_coefficient(mini, l, e));
    }
  }

  TEST_CASE("three routes agree") {
    for (int k = 0; k <= 8; ++k)
      for (int l = 0; l <= 8; ++l)
        for (bool t : {false, true}) {
          DualOp op{l, t};
          auto r = act_on_coefficient(op, k);
          CHECK(act_on_coefficient_cartan(op, k) == r);
          CHECK(act_on_coefficient_pairing(op, k) == r);
        }
  }

  TEST_CASE("mod u lemma") {
    for (int l = 0; l <= 8; ++l)
      for (int k = 1; k <= 8; ++k) {
        CHECK(reduce_mod_u(act_on_coefficient({l + 1, false}, k)).is_zero());
        CHECK(reduce_mod_u(act_on_coefficient({l, true}, k)) ==
              (l == k - 1 ? mono(2 * k - 1, 0) : CoeffElem{}));
      }
  }

  TEST_CASE("Cartan expansions") {
    auto one = DualOp{0, false};
    auto x1 = cartan_expand({1, false});
    std::vector<CartanTerm> want{{CoeffElem::one(), {1, false}, one},
                                 {CoeffElem::one(), one, {1, false}},
                                 {mono(0, 1), {0, true}, {0, true}}};
    std::sort(want.begin(), want.end());
    auto got = x1;
    std::sort(got.begin(), got.end());
    CHECK(got == want);
    auto t0 = cartan_expand({0, true});
    CHECK(t0.size() == 2);
    bool found = false;
    for (const auto& c : cartan_expand({1, true}))
      found = found || (c.coefficient == mono(1, 0) && c.left == DualOp{0, true} && c.right == DualOp{0, true});
    CHECK(found);
  }

  TEST_CASE("action on spaces with trivial action") {
    auto rp = rp_algebra(8);
    auto t = rp.generator("t");
    for (int n = 1; n <= 4; ++n) {
      auto y = rp.power(t, n);
      auto x1 = act_on_trivial({1, false}, rp, y);
      TrivialClass want;
      if (!rp.sq(1, y).is_zero()) want[CoeffMono::pos(1, 0)] = rp.sq(1, y);
      if (!rp.sq(2, y).is_zero()) want[CoeffMono::pos(0, 1)] = rp.sq(2, y);
      CHECK(x1 == want);
      TrivialClass t0;
      if (!rp.sq(1, y).is_zero()) t0[CoeffMono::pos(0, 0)] = rp.sq(1, y);
      CHECK(act_on_trivial({0, true}, rp, y) == t0);
      TrivialClass x1t0;
      if (!rp.sq(2, y).is_zero()) x1t0[CoeffMono::pos(1, 0)] = rp.sq(2, y);
      if (!rp.sq(3, y).is_zero()) x1t0[CoeffMono::pos(0, 1)] = rp.sq(3, y);
      CHECK(act_on_trivial({1, true}, rp, y) == x1t0);
    }
  }

  TEST_CASE("restriction to classical squares") {
    CHECK(restrict_operation(EqMonomial::xi_gen(1)) == 2);
    CHECK(restrict_operation(EqMonomial::tau_gen(0)) == 1);
    CHECK(restrict_operation(EqMonomial::xi_gen(1, 2) * EqMonomial::tau_gen(0)) == 5);
    CHECK_THROWS(restrict_operation(EqMonomial::xi_gen(2)));
    CHECK(DualOp{2, true}.name() == "(x1^2*t0)^v");
  }
}
