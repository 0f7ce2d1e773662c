#pragma once

#include <map>
#include <string>
#include <vector>

#include "c2coh/coefficients.hpp"
#include "c2coh/dual_steenrod.hpp"
#include "c2coh/unstable_algebra.hpp"

namespace c2coh {

// The operation dual to xi_1^ell (tau0 false) or xi_1^ell tau_0 (tau0 true).
struct DualOp {
  int ell = 0;
  bool tau0 = false;

  EqMonomial monomial() const;
  std::string name() const;
  auto operator<=>(const DualOp&) const = default;
};

// C_i^k = binom(i, k-i) a^{2i-k} u^{k-i}
CoeffElem pairing_closed_form(int i, int k);

// value on u^k, via the two-term recursion
CoeffElem act_on_coefficient(DualOp op, int k);
// value on u^k, via the Cartan expansion applied to u^{k-1} * u
CoeffElem act_on_coefficient_cartan(DualOp op, int k);
// value on u^k, by pairing against eta_R(u^k)
CoeffElem act_on_coefficient_pairing(DualOp op, int k);

CoeffElem reduce_mod_u(const CoeffElem& x);

struct CartanTerm {
  CoeffElem coefficient;
  DualOp left;
  DualOp right;
  auto operator<=>(const CartanTerm&) const = default;
};

std::vector<CartanTerm> cartan_expand(DualOp op);

// class of HF tensor H^*(X) for X with trivial action: coefficient monomial -> class
using TrivialClass = std::map<CoeffMono, Polynomial>;

// sum_j binom(ell, j) a^{ell-j} u^j Sq^{ell+j+eps} y
TrivialClass act_on_trivial(DualOp op, const UnstableAlgebra& m, const Polynomial& y);
std::string format(const UnstableAlgebra& m, const TrivialClass& x);

// the classical operation obtained by restriction (a -> 0, u -> 1): Sq^{2 ell + eps}
int restrict_operation(const EqMonomial& m);

}  // namespace c2coh
