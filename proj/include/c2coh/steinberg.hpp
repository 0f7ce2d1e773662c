#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "c2coh/unstable_algebra.hpp"

namespace c2coh {

// b^b tensor m in F[b] tensor M, |b| = 1
struct BTerm {
  int b = 0;
  Monomial m;
  auto operator<=>(const BTerm&) const = default;
};

class BPolynomial {
 public:
  BPolynomial() = default;
  static BPolynomial from_terms(std::vector<BTerm> terms);
  // c tensor b^k
  static BPolynomial from_coefficient(const Polynomial& c, int k);

  const std::vector<BTerm>& terms() const& { return terms_; }
  std::vector<BTerm> terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  Polynomial coefficient(int k) const;
  int max_b() const;  // -1 for zero

  BPolynomial& operator+=(const BPolynomial& other);
  friend BPolynomial operator+(BPolynomial x, const BPolynomial& y) { return x += y; }
  bool operator==(const BPolynomial&) const = default;

 private:
  std::vector<BTerm> terms_;
};

BPolynomial b_times(const BPolynomial& x, int k);
BPolynomial multiply(const UnstableAlgebra& m, const BPolynomial& x, const BPolynomial& y);
std::string format(const UnstableAlgebra& m, const BPolynomial& x);

// St(x) = sum_j b^{n-j} tensor Sq^j x, |x| = n
BPolynomial steinberg(const UnstableAlgebra& m, const Polynomial& x);
// rank of St on M^n
std::size_t steinberg_rank(const UnstableAlgebra& m, int n);

// Frobenius double: (Phi M)^{2n} = M^n, Sq^{2i} Phi x = Phi Sq^i x, odd squares vanish.
// Elements of Phi M are represented by the underlying class x.
class DoubledModule {
 public:
  explicit DoubledModule(std::shared_ptr<const UnstableAlgebra> m) : m_(std::move(m)) {}
  int dim(int d) const { return d % 2 == 0 ? m_->dim(d / 2) : 0; }
  int degree(const Polynomial& phi_x) const;
  Polynomial sq(int i, const Polynomial& phi_x) const;

 private:
  std::shared_ptr<const UnstableAlgebra> m_;
};

// Sq_0 : Phi M -> M, Phi x |-> Sq^{|x|} x
Polynomial sq0(const UnstableAlgebra& m, const Polynomial& x);

// The F[b]-submodule of F[b] tensor M generated by St(M), through a degree bound.
class RModule {
 public:
  RModule(const UnstableAlgebra& m, int bound);

  int bound() const { return bound_; }
  int dim(int d) const;
  std::vector<int> poincare_series() const;
  bool contains(const BPolynomial& y) const;
  // y = sum c * b^k St(x); the k = 0 part, as a class of M
  Polynomial rho1(const BPolynomial& y) const;
  // all elements b^k St(x), x basis, in degree d (these form a basis)
  const std::vector<BPolynomial>& basis(int d) const;
  // ambient coordinates of (F[b] tensor M)^d
  const std::vector<BTerm>& ambient(int d) const;

 private:
  struct Degree {
    std::vector<BTerm> ambient;
    std::map<BTerm, std::size_t> index;
    std::vector<BPolynomial> basis;
    std::vector<std::pair<int, Monomial>> labels;  // (k, x) for b^k St(x)
    EchelonBasis echelon;
  };
  BitVector coordinates(const Degree& deg, const BPolynomial& y) const;
  int degree_of(const BPolynomial& y) const;

  std::shared_ptr<const UnstableAlgebra> m_;
  int bound_;
  std::vector<Degree> degrees_;
};

RModule compute_R(const UnstableAlgebra& m, int bound);

struct AdemReport {
  bool ok = true;
  int checked = 0;
  std::string violation;
};

// Sq^1Sq^1 = 0, Sq^1Sq^2 = Sq^3, Sq^2Sq^2 = Sq^3Sq^1 on every basis class
AdemReport adem_spotcheck(const UnstableAlgebra& m, int bound);
AdemReport adem_spotcheck();  // F[t1,t2,t3] through degree 12

}  // namespace c2coh
