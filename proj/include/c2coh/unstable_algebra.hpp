#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "c2coh/gf2.hpp"

namespace c2coh {

struct AlgebraGenerator {
  std::string name;
  int degree = 1;
};

// Sq^i of each generator, keyed by generator index then i.  Missing entries
// default to Sq^0 = id, Sq^{|g|} g = g^2 and zero otherwise.
using SqTable = std::map<std::size_t, std::map<int, Polynomial>>;

// Connected unstable algebra F[generators]/(relations) over the Steenrod
// algebra, truncated at a degree bound.  When the quotient is zero in a window
// of degrees ending at the bound it vanishes above the bound too, and the
// algebra is called complete.
class UnstableAlgebra {
 public:
  UnstableAlgebra(std::vector<AlgebraGenerator> generators, std::vector<Polynomial> relations,
                  SqTable sq, int bound);
  static UnstableAlgebra point(int bound = 0);
  // F[t]/(t^{n+1}) with |t| = degree
  static UnstableAlgebra truncated_polynomial(std::string name, int degree, int height, int bound);

  const std::vector<AlgebraGenerator>& generators() const { return generators_; }
  const std::vector<Polynomial>& relations() const { return relations_; }
  const SqTable& sq_table() const { return sq_; }
  int bound() const { return bound_; }
  bool is_complete() const { return complete_; }
  // true when degree d can be computed
  bool in_range(int d) const { return d <= bound_ || complete_; }

  int degree(const Monomial& m) const;
  // nullopt for zero; throws on inhomogeneous input
  std::optional<int> degree(const Polynomial& x) const;
  const std::vector<Monomial>& basis(int d) const;
  int dim(int d) const { return static_cast<int>(basis(d).size()); }
  std::vector<int> poincare_series(int up_to) const;
  int top_degree() const;  // highest nonzero degree within bound

  Polynomial reduce(const Polynomial& x) const;
  Polynomial multiply(const Polynomial& x, const Polynomial& y) const;
  Polynomial power(const Polynomial& x, int n) const;
  Polynomial sq(int i, const Polynomial& x) const;
  Polynomial total_sq(const Polynomial& x) const;

  std::optional<GenId> generator_index(std::string_view name) const;
  Polynomial generator(std::string_view name) const;
  Polynomial parse(std::string_view text) const;  // result is reduced
  std::string format(const Monomial& m) const;
  std::string format(const Polynomial& x) const;

 private:
  struct DegreeData {
    std::vector<Monomial> monomials;
    std::map<Monomial, std::size_t> index;
    EchelonBasis ideal;
    std::vector<Monomial> basis;
  };

  void build_degrees();
  void validate_squares() const;
  bool reduce_or_empty_check(const Polynomial& x, const Polynomial& y) const;
  std::vector<Monomial> monomials_of_degree(int d) const;
  Polynomial sq_free(int i, const Polynomial& x) const;  // no reduction
  Polynomial sq_monomial(int i, const Monomial& m) const;

  std::vector<AlgebraGenerator> generators_;
  std::vector<int> weights_;
  std::vector<Polynomial> relations_;
  SqTable sq_;
  int bound_;
  bool complete_ = false;
  std::vector<DegreeData> degrees_;
  std::vector<std::vector<Polynomial>> squares_;  // squares_[g][i] = Sq^i g, unreduced
};

// Kunneth: generators must have distinct names.
UnstableAlgebra tensor_product(const UnstableAlgebra& x, const UnstableAlgebra& y, int bound);

}  // namespace c2coh
