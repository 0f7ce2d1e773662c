#include "c2coh/frames.hpp"

#include <algorithm>
#include <stdexcept>

#include "c2coh/errors.hpp"

namespace c2coh {

namespace {

std::string deg_str(int d) { return std::to_string(d); }

BitVector coords(const std::vector<Monomial>& basis, const Polynomial& x) {
  BitVector v(basis.size());
  for (const auto& m : x.terms()) {
    auto it = std::lower_bound(basis.begin(), basis.end(), m);
    if (it == basis.end() || *it != m) throw std::invalid_argument("class is not reduced");
    v.flip(static_cast<std::size_t>(it - basis.begin()));
  }
  return v;
}

Verdict pass(std::string name) { return {std::move(name), true, ""}; }
Verdict fail(std::string name, std::string witness) {
  return {std::move(name), false, std::move(witness)};
}

}  // namespace

void validate_model(const SpaceModel& model, bool require_bijective) {
  if (model.bound < 0) throw ModelError("negative bound", "/bound");
  if (!model.even.in_range(model.bound))
    throw ModelError("even cohomology is not computed through the model bound", "/even");
  if (!model.fixed.in_range(model.bound))
    throw ModelError("fixed point cohomology is not computed through the model bound", "/fixed");
  for (const auto& [key, value] : model.kappa0) {
    std::string ptr = "/kappa0/" + model.even.format(key);
    int d = model.even.degree(key);
    if (d > model.bound) throw ModelError("kappa0 key above the bound", ptr);
    if (d % 2 != 0) throw ModelError("kappa0 key in odd degree", ptr);
    const auto& basis = model.even.basis(d);
    if (!std::binary_search(basis.begin(), basis.end(), key))
      throw ModelError("kappa0 key is not a basis class", ptr);
    auto vd = value.is_zero() ? std::optional<int>{} : model.fixed.degree(value);
    if (vd && *vd != d / 2) throw ModelError("kappa0 value has the wrong degree", ptr);
    if (model.fixed.reduce(value) != value) throw ModelError("kappa0 value is not reduced", ptr);
  }
  for (int d = 0; d <= model.bound; d += 2) {
    for (const auto& m : model.even.basis(d))
      if (!model.kappa0.count(m))
        throw ModelError("kappa0 undefined on " + model.even.format(m), "/kappa0");
    if (!require_bijective) continue;
    const auto& fb = model.fixed.basis(d / 2);
    EchelonBasis e(fb.size());
    for (const auto& m : model.even.basis(d)) e.insert(coords(fb, model.kappa0.at(m)));
    if (e.rank() < fb.size())
      throw ModelError("kappa0 not surjective in degree " + deg_str(d), "/kappa0");
    if (e.rank() < model.even.basis(d).size())
      throw ModelError("kappa0 not injective in degree " + deg_str(d), "/kappa0");
  }
  if (model.kappa0.count(Monomial{}) && model.kappa0.at(Monomial{}) != Polynomial::one())
    throw ModelError("kappa0 must send 1 to 1", "/kappa0/1");
}

Polynomial apply_kappa(const KappaMap& kappa, const Polynomial& x) {
  Polynomial r;
  for (const auto& m : x.terms()) {
    auto it = kappa.find(m);
    if (it == kappa.end()) throw std::invalid_argument("kappa0 undefined on a term");
    r += it->second;
  }
  return r;
}

std::optional<Polynomial> invert_kappa(const SpaceModel& model, const Polynomial& y) {
  auto n = model.fixed.degree(y);
  if (!n) return Polynomial{};
  const auto& eb = model.even.basis(2 * *n);
  const auto& fb = model.fixed.basis(*n);
  EchelonBasis e(fb.size(), eb.size());
  for (std::size_t k = 0; k < eb.size(); ++k) {
    BitVector tag(eb.size());
    tag.set(k);
    e.insert(coords(fb, apply_kappa(model.kappa0, Polynomial(eb[k]))), std::move(tag));
  }
  auto r = e.reduce(coords(fb, y));
  if (r.residual.any()) return std::nullopt;
  std::vector<Monomial> out;
  for (std::size_t k = 0; k < eb.size(); ++k)
    if (r.tag.get(k)) out.push_back(eb[k]);
  return Polynomial::from_terms(std::move(out));
}

// --- free modules -------------------------------------------------------------

FreeHFModule::FreeHFModule(std::vector<FreeGenerator> generators)
    : generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.level < 0) throw std::invalid_argument("negative level");
}

void FreeHFModule::remove_generator(std::size_t i) {
  if (i >= generators_.size()) throw std::out_of_range("no such generator");
  generators_.erase(generators_.begin() + static_cast<long>(i));
}

GradedFreeModule FreeHFModule::graded() const {
  std::vector<ModuleGenerator> gens;
  for (const auto& g : generators_) gens.push_back({g.name, RODegree::diagonal(g.level)});
  return GradedFreeModule(CoefficientRing::hf(), std::move(gens));
}

PurityResult purity_check(const SpaceModel& model) {
  PurityResult r;
  for (int d = 1; d <= model.bound; d += 2)
    if (int k = model.even.dim(d); k > 0) {
      r.failure = "odd concentration: dim H^" + deg_str(d) + "(X) = " + std::to_string(k);
      return r;
    }
  std::vector<FreeGenerator> gens;
  for (int n = 0; 2 * n <= model.bound; ++n) {
    int e = model.even.dim(2 * n), f = model.fixed.dim(n);
    if (e != f) {
      r.failure = "dimension mismatch at level " + deg_str(n) + ": dim H^" + deg_str(2 * n) +
                  "(X) = " + std::to_string(e) + ", dim H^" + deg_str(n) +
                  "(X^C2) = " + std::to_string(f);
      return r;
    }
    for (const auto& m : model.even.basis(2 * n)) gens.push_back({model.even.format(m), n, m});
  }
  r.pure = true;
  r.module = FreeHFModule(std::move(gens));
  return r;
}

std::vector<ModuleBasisElement> module_cohomology(const FreeHFModule& f, RODegree d) {
  return f.graded().basis(d);
}

std::vector<ModuleBasisElement> lift_diagonal_class(const SpaceModel& model, const FreeHFModule& f,
                                                    const Polynomial& x) {
  auto d = model.even.degree(x);
  if (!d) return {};
  if (*d % 2 != 0) throw std::invalid_argument("odd degree class has no diagonal lift");
  std::vector<ModuleBasisElement> out;
  for (const auto& m : model.even.reduce(x).terms()) {
    auto it = std::find_if(f.generators().begin(), f.generators().end(),
                           [&](const FreeGenerator& g) { return g.cls == m; });
    if (it == f.generators().end())
      throw std::invalid_argument("no generator for " + model.even.format(m));
    out.push_back({CoeffMono::pos(0, 0), it->name});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<int, Monomial>> restrict_to_underlying(
    const FreeHFModule& f, const std::vector<ModuleBasisElement>& x) {
  std::vector<std::pair<int, Monomial>> out;
  for (const auto& e : x) {
    auto it = std::find_if(f.generators().begin(), f.generators().end(),
                           [&](const FreeGenerator& g) { return g.name == e.generator; });
    if (it == f.generators().end()) throw std::invalid_argument("unknown generator " + e.generator);
    if (auto u = restriction(CoeffElem(e.coefficient))) out.emplace_back(*u + it->level, it->cls);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --- frames -------------------------------------------------------------------

bool FrameReport::pass() const {
  return !verdicts.empty() &&
         std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

const FrameRow* FrameReport::row(const Monomial& x) const {
  for (const auto& r : rows)
    if (r.x == x) return &r;
  return nullptr;
}

FrameReport build_frame(const SpaceModel& model) {
  validate_model(model, false);
  FrameReport report;
  report.model = model.name;
  report.kappa0 = model.kappa0;
  auto purity = purity_check(model);
  if (!purity.pure) {
    report.verdicts.push_back(fail("purity", purity.failure));
    return report;
  }
  report.verdicts.push_back(pass("purity"));
  for (int m = 0; 2 * m <= model.bound; ++m)
    for (const auto& x : model.even.basis(2 * m)) {
      FrameRow row;
      row.x = x;
      row.name = model.even.format(x);
      row.m = m;
      row.r_sigma = steinberg(model.fixed, apply_kappa(model.kappa0, Polynomial(x)));
      for (int l = 0; l <= m; ++l) row.kappa.push_back(row.r_sigma.coefficient(m - l));
      report.rows.push_back(std::move(row));
    }
  report.verdicts.push_back(verify_steinberg_injective(model));
  report.verdicts.push_back(verify_conjugation_equation(report));
  report.verdicts.push_back(verify_franz_puppe(model, report));
  report.verdicts.push_back(verify_multiplicativity(model, report));
  report.verdicts.push_back(verify_uniqueness(model, report));
  report.verdicts.push_back(nakayama_splitting_check(model, report, purity.module));
  report.verdicts.push_back(borel_vs_R(model, report));
  report.verdicts.push_back(verify_kappa_shadow(model, report));
  return report;
}

Verdict verify_steinberg_injective(const SpaceModel& model) {
  for (int n = 0; 2 * n <= model.bound; ++n)
    if (steinberg_rank(model.fixed, n) != static_cast<std::size_t>(model.fixed.dim(n)))
      return fail("steinberg-injective", "St not injective in degree " + deg_str(n));
  return pass("steinberg-injective");
}

Verdict verify_conjugation_equation(const FrameReport& report) {
  const char* name = "conjugation-equation";
  for (const auto& row : report.rows) {
    if (row.r_sigma.max_b() > row.m)
      return fail(name, "b-power above " + deg_str(row.m) + " in r sigma of class " +
                            row.name);
    auto it = report.kappa0.find(row.x);
    if (it == report.kappa0.end())
      return fail(name, "no kappa0 entry for class " + row.name);
    if (row.r_sigma.coefficient(row.m) != it->second)
      return fail(name, "leading coefficient differs from kappa0 on class " +
                            row.name);
  }
  return pass(name);
}

Verdict verify_franz_puppe(const SpaceModel& model, const FrameReport& report) {
  const char* name = "franz-puppe";
  const auto& E = model.even;
  const auto& F = model.fixed;
  for (const auto& row : report.rows) {
    Polynomial x(row.x);
    Polynomial k0 = apply_kappa(model.kappa0, x);
    std::string cls = E.format(row.x);
    for (int l = 0; 2 * l <= model.bound; ++l) {
      if (2 * row.m + 2 * l <= model.bound &&
          apply_kappa(model.kappa0, E.sq(2 * l, x)) != F.sq(l, k0))
        return fail(name, "kappa0 Sq^" + deg_str(2 * l) + " != Sq^" + deg_str(l) + " kappa0 on " + cls);
      if (2 * row.m + 2 * l + 1 <= model.bound && !E.sq(2 * l + 1, x).is_zero())
        return fail(name, "Sq^" + deg_str(2 * l + 1) + " " + cls + " != 0");
      Polynomial kl = l <= row.m ? row.kappa[l] : Polynomial{};
      if (l <= row.m && kl != F.sq(l, k0))
        return fail(name, "kappa_" + deg_str(l) + " != Sq^" + deg_str(l) + " kappa0 on " + cls);
    }
  }
  return pass(name);
}

Verdict verify_multiplicativity(const SpaceModel& model, const FrameReport& report) {
  const char* name = "multiplicativity";
  for (std::size_t i = 0; i < report.rows.size(); ++i)
    for (std::size_t j = i; j < report.rows.size(); ++j) {
      const auto& x = report.rows[i];
      const auto& y = report.rows[j];
      if (2 * (x.m + y.m) > model.bound) continue;
      Polynomial xy = model.even.multiply(Polynomial(x.x), Polynomial(y.x));
      BPolynomial lhs = steinberg(model.fixed, apply_kappa(model.kappa0, xy));
      BPolynomial rhs = multiply(model.fixed, x.r_sigma, y.r_sigma);
      if (lhs != rhs)
        return fail(name, "r sigma(" + model.even.format(x.x) + " * " + model.even.format(y.x) +
                              ") != product");
    }
  return pass(name);
}

namespace {

std::size_t count_sections_in(const RModule& R, const SpaceModel& model, const Monomial& x) {
  int m = model.even.degree(x) / 2;
  int d = 2 * m;
  const auto& ambient = R.ambient(d);
  std::vector<std::size_t> constrained;
  for (std::size_t k = 0; k < ambient.size(); ++k)
    if (ambient[k].b >= m) constrained.push_back(k);
  auto project = [&](const BPolynomial& y) {
    BitVector v(constrained.size());
    for (const auto& t : y.terms()) {
      if (t.b < m) continue;
      auto it = std::find(ambient.begin(), ambient.end(), t);
      v.flip(static_cast<std::size_t>(
          std::find(constrained.begin(), constrained.end(),
                    static_cast<std::size_t>(it - ambient.begin())) -
          constrained.begin()));
    }
    return v;
  };
  const auto& basis = R.basis(d);
  EchelonBasis e(constrained.size());
  for (const auto& y : basis) e.insert(project(y));
  auto target = project(BPolynomial::from_coefficient(apply_kappa(model.kappa0, Polynomial(x)), m));
  if (e.reduce(target).residual.any()) return 0;
  std::size_t free_dims = basis.size() - e.rank();
  return free_dims >= 63 ? SIZE_MAX : std::size_t{1} << free_dims;
}

}  // namespace

std::size_t count_sections(const SpaceModel& model, const Monomial& x) {
  RModule R(model.fixed, model.even.degree(x));
  return count_sections_in(R, model, x);
}

Verdict verify_uniqueness(const SpaceModel& model, const FrameReport& report) {
  const char* name = "uniqueness";
  RModule R(model.fixed, model.bound);
  for (const auto& row : report.rows) {
    std::size_t c = count_sections_in(R, model, row.x);
    if (c != 1)
      return fail(name, std::to_string(c) + " candidate sections for " + model.even.format(row.x));
    if (!R.contains(row.r_sigma))
      return fail(name, "r sigma(" + model.even.format(row.x) + ") not in R");
  }
  return pass(name);
}

Verdict nakayama_splitting_check(const SpaceModel& model, const FrameReport& report,
                                 const FreeHFModule& f) {
  const char* name = "nakayama";
  for (int D = 0; 2 * D <= model.bound; ++D) {
    // source basis: c b^e with c a homology class of degree d, d + e = D
    std::vector<std::pair<int, Monomial>> source;
    for (int d = 0; d <= D; ++d)
      for (const auto& c : model.fixed.basis(d)) source.emplace_back(d, c);
    std::vector<std::size_t> target;
    for (std::size_t i = 0; i < f.generators().size(); ++i)
      if (f.generators()[i].level <= D) target.push_back(i);
    if (source.size() != target.size())
      return fail(name, "degree " + deg_str(D) + ": " + std::to_string(source.size()) +
                            " source classes, " + std::to_string(target.size()) + " targets");
    BitMatrix mat(source.size(), target.size());
    for (std::size_t t = 0; t < target.size(); ++t) {
      const auto& g = f.generators()[target[t]];
      const FrameRow* row = report.row(g.cls);
      if (!row) return fail(name, "no frame row for generator " + g.name);
      for (std::size_t s = 0; s < source.size(); ++s) {
        int l = source[s].first - g.level;
        if (l < 0 || l > row->m) continue;
        if (row->kappa[l].contains(source[s].second)) mat.set(s, t);
      }
    }
    if (rank_gf2(mat) != source.size())
      return fail(name, "not an isomorphism in degree " + deg_str(D));
  }
  return pass(name);
}

Verdict borel_vs_R(const SpaceModel& model, const FrameReport& report) {
  const char* name = "borel-vs-R";
  RModule R(model.fixed, model.bound);
  int borel = 0;
  for (int d = 0; d <= model.bound; ++d) {
    borel += model.even.dim(d);
    if (R.dim(d) != borel)
      return fail(name, "degree " + deg_str(d) + ": dim R = " + std::to_string(R.dim(d)) +
                            ", dim H(X)[b] = " + std::to_string(borel));
  }
  for (const auto& row : report.rows) {
    std::string cls = model.even.format(row.x);
    if (!R.contains(row.r_sigma)) return fail(name, "r sigma(" + cls + ") not in R");
    auto back = invert_kappa(model, R.rho1(row.r_sigma));
    if (!back || *back != Polynomial(row.x)) return fail(name, "rho sigma != id on " + cls);
    if (4 * row.m <= model.bound) {
      Polynomial sq = model.even.multiply(Polynomial(row.x), Polynomial(row.x));
      if (row.r_sigma.coefficient(0) != apply_kappa(model.kappa0, sq))
        return fail(name, "b^0 coefficient of r sigma(" + cls + ") != kappa0(x^2)");
    }
  }
  return pass(name);
}

TrivialClass kappa_total(const FrameRow& row, const CoeffMono& c) {
  TrivialClass out;
  for (int j = 0; j <= row.m; ++j) {
    if (row.kappa[j].is_zero()) continue;
    auto coef = coeff_mul(c, CoeffMono::pos(row.m - j, j));
    if (!coef) continue;
    out[*coef] += row.kappa[j];
    if (out[*coef].is_zero()) out.erase(*coef);
  }
  return out;
}

Polynomial shadow_projection(const TrivialClass& t, int k) {
  Polynomial r;
  for (const auto& [c, y] : t)
    if (pr(phi_shadow(CoeffElem(c)), k)) r += y;
  return r;
}

Verdict verify_kappa_shadow(const SpaceModel& /*model*/, const FrameReport& report) {
  const char* name = "kappa-shadow";
  const CoeffMono cs[] = {CoeffMono::pos(0, 0), CoeffMono::pos(1, 0), CoeffMono::pos(0, 1),
                          CoeffMono::pos(2, 3)};
  for (const auto& row : report.rows)
    for (const auto& c : cs) {
      auto total = kappa_total(row, c);
      for (int k = 0; k <= row.m + c.u + 1; ++k) {
        int l = k - c.u;
        Polynomial expected = (l >= 0 && l <= row.m) ? row.kappa[l] : Polynomial{};
        if (shadow_projection(total, k) != expected)
          return fail(name, "pr_" + deg_str(k) + " mismatch on class " +
                                row.name);
      }
    }
  return pass(name);
}

}  // namespace c2coh
