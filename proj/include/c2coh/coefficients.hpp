#pragma once

#include <optional>
#include <string>
#include <vector>

#include "c2coh/gf2.hpp"
#include "c2coh/grading.hpp"

namespace c2coh {

// a^a u^u.  For theta monomials the exponents are non-positive:
// theta*a^{-i}u^{-j} is stored as {true, -i, -j}.  Laurent rings reuse the
// non-theta form with signed exponents.  In all cases the cohomological degree
// is a*alpha + u*(alpha-1).
struct CoeffMono {
  bool theta = false;
  int a = 0;
  int u = 0;

  static CoeffMono pos(int a, int u) { return {false, a, u}; }
  // theta/(a^i u^j)
  static CoeffMono neg(int i, int j) { return {true, -i, -j}; }

  RODegree degree() const { return {-u, a + u}; }
  bool valid_in_hf() const { return theta ? (a <= 0 && u <= -2) : (a >= 0 && u >= 0); }
  auto operator<=>(const CoeffMono&) const = default;
};

std::string to_string(const CoeffMono& m);

// Element of the coefficient ring of HF: a GF(2)-combination of valid monomials.
class CoeffElem {
 public:
  CoeffElem() = default;
  explicit CoeffElem(CoeffMono m);
  static CoeffElem one() { return CoeffElem(CoeffMono::pos(0, 0)); }
  static CoeffElem from_terms(std::vector<CoeffMono> terms);

  const std::vector<CoeffMono>& terms() const& { return terms_; }
  std::vector<CoeffMono> terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  // degree of a nonzero homogeneous element
  std::optional<RODegree> degree() const;

  CoeffElem& operator+=(const CoeffElem& other);
  friend CoeffElem operator+(CoeffElem x, const CoeffElem& y) { return x += y; }
  friend CoeffElem operator*(const CoeffElem& x, const CoeffElem& y);
  auto operator<=>(const CoeffElem&) const = default;
  bool operator==(const CoeffElem&) const = default;

 private:
  std::vector<CoeffMono> terms_;
};

std::string to_string(const CoeffElem& x);

std::optional<CoeffMono> coeff_mul(const CoeffMono& x, const CoeffMono& y);
CoeffElem coeff_mul(const CoeffElem& x, const CoeffElem& y);

// The unique basis monomial of the coefficients in degree d, if any.
std::optional<CoeffMono> hf_basis(RODegree d);

enum class Shape { zero, dot, fbar, l, l_minus };

std::string shape_token(Shape s);  // 0, dot, Fbar, L, L-

// Lewis diagram: value at C2/C2 (top), at C2/e (bottom), with restriction
// (top -> bottom), transfer (bottom -> top) and the Weyl action on the bottom.
struct MackeyShape {
  Shape tag = Shape::zero;
  BitMatrix restriction;
  BitMatrix transfer;
  BitMatrix conjugation;

  static MackeyShape make(Shape s);
  std::size_t top_dim() const { return restriction.cols(); }
  std::size_t bottom_dim() const { return restriction.rows(); }
  bool satisfies_relations() const;
};

Shape chart_shape(RODegree d);
MackeyShape chart_lookup(RODegree d);

// Restriction to underlying coefficients F[u^{+-1}]: returns the u-exponent, or
// nullopt for zero.  Throws on inhomogeneous input.
std::optional<int> restriction(const CoeffElem& x);

enum class RingKind { hf, borel, geometric, truncated_borel };

// Descriptor for the coefficient rings: HF itself, F[a,u^{+-1}],
// F[a^{+-1},u], and F[a,u^{+-1}]/(a^n).
struct CoefficientRing {
  RingKind kind = RingKind::hf;
  int truncation = 0;

  static CoefficientRing hf() { return {RingKind::hf, 0}; }
  static CoefficientRing borel() { return {RingKind::borel, 0}; }
  static CoefficientRing geometric() { return {RingKind::geometric, 0}; }
  static CoefficientRing truncated(int n) { return {RingKind::truncated_borel, n}; }

  bool admits(const CoeffMono& m) const;
  std::optional<CoeffMono> basis(RODegree d) const;
  std::string name() const;
  auto operator<=>(const CoefficientRing&) const = default;
};

CoefficientRing free_sphere_cohomology(int n);

// Element of one of the Laurent rings.
class LaurentElem {
 public:
  explicit LaurentElem(CoefficientRing ring) : ring_(ring) {}
  LaurentElem(CoefficientRing ring, std::vector<CoeffMono> terms);

  const CoefficientRing& ring() const { return ring_; }
  const std::vector<CoeffMono>& terms() const& { return terms_; }
  std::vector<CoeffMono> terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }

  LaurentElem& operator+=(const LaurentElem& other);
  friend LaurentElem operator+(LaurentElem x, const LaurentElem& y) { return x += y; }
  friend LaurentElem operator*(const LaurentElem& x, const LaurentElem& y);
  bool operator==(const LaurentElem&) const = default;

 private:
  CoefficientRing ring_;
  std::vector<CoeffMono> terms_;
};

// Geometric fixed points of a coefficient class: theta part dies, the
// polynomial part lands in F[a^{+-1},u].
LaurentElem phi_shadow(const CoeffElem& x);
// parity of the monomials with u-exponent k
Bit pr(const LaurentElem& x, int k);

struct ModuleGenerator {
  std::string name;
  RODegree degree;
};

struct ModuleBasisElement {
  CoeffMono coefficient;
  std::string generator;
  auto operator<=>(const ModuleBasisElement&) const = default;
};

// Free module over a coefficient ring on generators in RO(C2)-degrees.
class GradedFreeModule {
 public:
  GradedFreeModule(CoefficientRing ring, std::vector<ModuleGenerator> generators);
  static GradedFreeModule ring_itself(CoefficientRing ring);

  const CoefficientRing& ring() const { return ring_; }
  const std::vector<ModuleGenerator>& generators() const { return generators_; }
  std::vector<ModuleBasisElement> basis(RODegree d) const;
  std::size_t dim(RODegree d) const { return basis(d).size(); }

 private:
  CoefficientRing ring_;
  std::vector<ModuleGenerator> generators_;
};

// base tensor H^*(X) for X with trivial action: a class of degree m sits in m + 0*alpha.
GradedFreeModule tensor_with_trivial(const GradedFreeModule& base, const GradedVector& x);

}  // namespace c2coh
