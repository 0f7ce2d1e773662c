#pragma once

// Reference computations written without the library's algorithms.

#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "c2coh/coefficients.hpp"
#include "c2coh/frames.hpp"

namespace oracle {

// parity of C(n,k) from an additive Pascal table
bool binom_odd(int n, int k);

// rank over GF(2) of 0/1 rows, plain elimination
std::size_t rank(std::vector<std::vector<int>> rows);

// chart token read off the picture: the two cones and the empty strip
std::string chart_token(int p, int q);

// F[a,u][xi1, tau0] / (tau0^2 = a tau0 xi1 + u xi1): the dual algebra modulo
// tau_k, xi_{k+1} for k >= 1.  Keys are (a, u, xi1, tau0).
using Mini = std::map<std::array<int, 4>, int>;
Mini mini_mul(const Mini& x, const Mini& y);
Mini mini_pow(const Mini& x, int n);
Mini zeta1();      // a xi1 + tau0
Mini eta_u();      // a tau0 + u
// coefficient of xi1^i tau0^eps, as a set of (a, u) exponents
std::set<std::pair<int, int>> mini_coefficient(const Mini& x, int i, int eps);

std::set<std::pair<int, int>> to_set(const c2coh::CoeffElem& x);

// St(t^k) in F[b] tensor F[t]/t^{n+1}: set of (b exponent, t exponent)
std::set<std::pair<int, int>> steinberg_rp(int n, int k);

// dims of the span of b^e St(t^k) in F[b] tensor F[t]/t^{n+1}, degrees 0..top
std::vector<int> r_series_rp(int n, int top);

// enumerate every subset of R-basis elements in degree |x| and count the
// sums whose b^{>=m} part is kappa0(x) b^m
std::size_t count_sections_brute(const c2coh::SpaceModel& model, const c2coh::Monomial& x);

}  // namespace oracle
