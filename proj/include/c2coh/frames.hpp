#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "c2coh/coefficient_action.hpp"
#include "c2coh/coefficients.hpp"
#include "c2coh/steinberg.hpp"
#include "c2coh/unstable_algebra.hpp"

namespace c2coh {

using KappaMap = std::map<Monomial, Polynomial>;

// Candidate conjugation space: H^*(X), H^*(X^C2) and the halving map kappa_0
// given on the monomial basis of H^{2n}(X), 2n <= bound.
struct SpaceModel {
  std::string name;
  UnstableAlgebra even;
  UnstableAlgebra fixed;
  KappaMap kappa0;
  int bound = 0;
};

// Structural checks (degrees, coverage of the basis); throws ModelError.
// With require_bijective, kappa_0 must also be a bijection in each degree.
void validate_model(const SpaceModel& model, bool require_bijective = true);

Polynomial apply_kappa(const KappaMap& kappa, const Polynomial& x);
// inverse of kappa_0 on a homogeneous class of H^n(X^C2); nullopt when not in the image
std::optional<Polynomial> invert_kappa(const SpaceModel& model, const Polynomial& y);

struct FreeGenerator {
  std::string name;
  int level = 0;  // generator in degree level*(1+alpha)
  Monomial cls;   // the class of H^{2 level}(X) it lifts
};

class FreeHFModule {
 public:
  FreeHFModule() = default;
  explicit FreeHFModule(std::vector<FreeGenerator> generators);
  const std::vector<FreeGenerator>& generators() const { return generators_; }
  void remove_generator(std::size_t i);
  GradedFreeModule graded() const;

 private:
  std::vector<FreeGenerator> generators_;
};

struct PurityResult {
  bool pure = false;
  std::string failure;
  FreeHFModule module;
};

PurityResult purity_check(const SpaceModel& model);

std::vector<ModuleBasisElement> module_cohomology(const FreeHFModule& f, RODegree d);
// the lift of x in H^{2n}(X) to the free module, in degree n(1+alpha)
std::vector<ModuleBasisElement> lift_diagonal_class(const SpaceModel& model, const FreeHFModule& f,
                                                    const Polynomial& x);
// restriction to the underlying nonequivariant classes: rho(c * x_i) = rho(c) u^{n_i} x_i.
// Returns (u exponent, class) pairs.
std::vector<std::pair<int, Monomial>> restrict_to_underlying(
    const FreeHFModule& f, const std::vector<ModuleBasisElement>& x);

struct Verdict {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct FrameRow {
  Monomial x;
  std::string name;
  int m = 0;                     // |x| = 2m
  BPolynomial r_sigma;           // St(kappa_0 x)
  std::vector<Polynomial> kappa;  // kappa[l] = coefficient of b^{m-l}
};

struct FrameReport {
  std::string model;
  std::vector<FrameRow> rows;
  KappaMap kappa0;  // kappa_0 as recorded for the conjugation check
  std::vector<Verdict> verdicts;

  bool pass() const;
  const FrameRow* row(const Monomial& x) const;
};

// Builds r sigma and runs every check below.
FrameReport build_frame(const SpaceModel& model);

Verdict verify_steinberg_injective(const SpaceModel& model);
Verdict verify_conjugation_equation(const FrameReport& report);
Verdict verify_franz_puppe(const SpaceModel& model, const FrameReport& report);
Verdict verify_multiplicativity(const SpaceModel& model, const FrameReport& report);
Verdict verify_uniqueness(const SpaceModel& model, const FrameReport& report);
Verdict nakayama_splitting_check(const SpaceModel& model, const FrameReport& report,
                                 const FreeHFModule& f);
Verdict borel_vs_R(const SpaceModel& model, const FrameReport& report);
Verdict verify_kappa_shadow(const SpaceModel& model, const FrameReport& report);

// number of sections s in R H^*(X^C2)^{2m} with max b-degree <= m and leading
// coefficient kappa_0(x): 0, or a power of 2
std::size_t count_sections(const SpaceModel& model, const Monomial& x);

// kappa_T(c * x) = sum_j c a^{m-j} u^j tensor kappa_j(x) in HF tensor H^*(X^C2)
TrivialClass kappa_total(const FrameRow& row, const CoeffMono& c);
// sum of the classes whose coefficient has pr_k(phi) = 1
Polynomial shadow_projection(const TrivialClass& t, int k);

}  // namespace c2coh
