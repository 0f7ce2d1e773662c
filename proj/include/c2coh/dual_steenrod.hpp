#pragma once

#include <random>
#include <string>
#include <vector>

#include "c2coh/coefficients.hpp"
#include "c2coh/grading.hpp"

namespace c2coh {

// Monomial a^a u^u prod xi_i^{xi[i-1]} prod tau_i^{tau[i]} of the dual
// equivariant Steenrod algebra.  Normal form has every tau exponent <= 1.
struct EqMonomial {
  int a = 0;
  int u = 0;
  std::vector<int> xi;   // xi[i-1] is the exponent of xi_i
  std::vector<int> tau;  // tau[i] is the exponent of tau_i

  static EqMonomial coefficient(int a, int u);
  static EqMonomial xi_gen(int i, int e = 1);
  static EqMonomial tau_gen(int i, int e = 1);

  int xi_exp(int i) const;
  int tau_exp(int i) const;
  void set_xi(int i, int e);
  void set_tau(int i, int e);
  void trim();

  bool is_normal() const;
  bool is_coefficient() const;  // no xi or tau factor
  EqMonomial generator_part() const;
  CoeffMono coefficient_part() const { return CoeffMono::pos(a, u); }

  auto operator<=>(const EqMonomial&) const = default;
};

EqMonomial operator*(const EqMonomial& x, const EqMonomial& y);

RODegree degree(const EqMonomial& m, Grading g = Grading::homological);
// topological dimension of the xi/tau part
int generator_dimension(const EqMonomial& m);
std::string to_string(const EqMonomial& m);

// Canonical order used for storage and printing.
struct PrintOrder {
  bool operator()(const EqMonomial& x, const EqMonomial& y) const;
};

class EqElement {
 public:
  EqElement() = default;
  explicit EqElement(EqMonomial m);
  static EqElement one() { return EqElement(EqMonomial{}); }
  static EqElement from_terms(std::vector<EqMonomial> terms);  // pairs cancel

  const std::vector<EqMonomial>& terms() const& { return terms_; }
  std::vector<EqMonomial> terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  bool is_normal() const;
  // sum with no normalisation
  EqElement& operator+=(const EqElement& other);
  friend EqElement operator+(EqElement x, const EqElement& y) { return x += y; }
  bool operator==(const EqElement&) const = default;

 private:
  std::vector<EqMonomial> terms_;
};

std::string to_string(const EqElement& x);

// Default bound on generator dimension of inputs.
inline constexpr int kDefaultAlgebraBound = 64;

// Rewrites tau_i^2 -> a tau_{i+1} + a tau_0 xi_{i+1} + u xi_{i+1} until no
// square remains.  With rng set, the rewrite order is randomised.
EqElement normal_form(const EqElement& raw, std::mt19937_64* rng = nullptr,
                      int bound = kDefaultAlgebraBound);
EqElement multiply(const EqElement& x, const EqElement& y);
EqElement power(const EqElement& x, int n);

// eta_R(a^k u^n) = a^k (a tau_0 + u)^n
EqElement right_unit(const CoeffMono& h);
EqElement right_unit(const CoeffElem& h);

struct TensorTerm {
  EqMonomial left;   // carries the coefficients
  EqMonomial right;  // coefficient free
  auto operator<=>(const TensorTerm&) const = default;
};

class EqTensor {
 public:
  EqTensor() = default;
  static EqTensor from_terms(std::vector<TensorTerm> terms);
  const std::vector<TensorTerm>& terms() const& { return terms_; }
  std::vector<TensorTerm> terms() && { return std::move(terms_); }
  bool operator==(const EqTensor&) const = default;

 private:
  std::vector<TensorTerm> terms_;
};

std::string to_string(const EqTensor& x);

// product in A tensor_{HF} A; coefficients on the right are moved left by eta_R
EqTensor tensor_multiply(const EqTensor& x, const EqTensor& y);
EqTensor coproduct(const EqElement& x, int bound = kDefaultAlgebraBound);

struct TripleTerm {
  EqMonomial first;
  EqMonomial second;
  EqMonomial third;
  auto operator<=>(const TripleTerm&) const = default;
};

std::vector<TripleTerm> coproduct_left_iterate(const EqElement& x);   // (D x 1) D
std::vector<TripleTerm> coproduct_right_iterate(const EqElement& x);  // (1 x D) D

CoeffElem counit(const EqElement& x);
EqElement counit_left(const EqTensor& t);   // (e x 1)
EqElement counit_right(const EqTensor& t);  // (1 x e)

// coefficient of the coefficient-free normal monomial m in x
CoeffElem pair(const EqMonomial& m, const EqElement& x);

// zeta-monomial: exps[n-1] is the exponent of zeta_n
struct ZetaMonomial {
  std::vector<int> exps;
};

EqElement psi_generator(int n);
EqElement psi(const ZetaMonomial& z);

// P_n, Q_n in F[a,u][xi_1]
struct PQ {
  EqElement p;
  EqElement q;
};
PQ p_sequence(int n);

}  // namespace c2coh
