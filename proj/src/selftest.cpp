#include "c2coh/selftest.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <optional>
#include <random>

#include "c2coh/coefficient_action.hpp"
#include "c2coh/coefficients.hpp"
#include "c2coh/dual_steenrod.hpp"
#include "c2coh/frames.hpp"
#include "c2coh/model_io.hpp"
#include "c2coh/models.hpp"
#include "c2coh/steinberg.hpp"

namespace c2coh {

namespace {

using Failure = std::optional<std::string>;

struct Check {
  std::string name;
  std::function<Failure()> run;
};

Polynomial random_poly(std::mt19937_64& rng, int gens, int max_exp, int terms) {
  std::vector<Monomial> out;
  for (int t = 0; t < terms; ++t) {
    std::vector<Monomial::Factor> f;
    for (int g = 0; g < gens; ++g)
      f.emplace_back(g, static_cast<std::uint32_t>(rng() % (max_exp + 1)));
    out.emplace_back(std::move(f));
  }
  return Polynomial::from_terms(std::move(out));
}

EqMonomial random_word(std::mt19937_64& rng, int max_dim) {
  EqMonomial m;
  for (int tries = 0; tries < 12; ++tries) {
    EqMonomial next = m;
    switch (rng() % 3) {
      case 0: next = m * EqMonomial::tau_gen(static_cast<int>(rng() % 3)); break;
      case 1: next = m * EqMonomial::xi_gen(1 + static_cast<int>(rng() % 2)); break;
      default: next = m * EqMonomial::coefficient(static_cast<int>(rng() % 2), static_cast<int>(rng() % 2));
    }
    if (generator_dimension(next) <= max_dim) m = next;
  }
  return m;
}

std::string model_failure(const FrameReport& r) {
  for (const auto& v : r.verdicts)
    if (!v.pass) return r.model + ": " + v.name + " (" + v.witness + ")";
  return r.model + ": no verdicts";
}

std::vector<Check> make_checks(int N) {
  std::vector<Check> checks;
  auto add = [&](std::string name, std::function<Failure()> f) {
    checks.push_back({std::move(name), std::move(f)});
  };

  // --- gf2 ---
  add("gf2: binom_mod2 against Pascal's triangle", [N]() -> Failure {
    int rows = std::max(8 * N, 16);
    std::vector<int> row{1};
    for (int n = 0; n <= rows; ++n) {
      for (int k = 0; k <= n; ++k)
        if (bool(binom_mod2(n, k)) != bool(row[k] & 1))
          return "n=" + std::to_string(n) + " k=" + std::to_string(k);
      std::vector<int> next(n + 2, 1);
      for (int k = 1; k <= n; ++k) next[k] = (row[k - 1] + row[k]) & 1;
      row = next;
    }
    return {};
  });
  add("gf2: polynomial ring axioms", [N]() -> Failure {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20 * N; ++t) {
      auto x = random_poly(rng, 3, 3, 4), y = random_poly(rng, 3, 3, 4), z = random_poly(rng, 3, 3, 4);
      if ((x * y) * z != x * (y * z)) return "associativity";
      if (x * y != y * x) return "commutativity";
      if (x * (y + z) != x * y + x * z) return "distributivity";
      if (x + x != Polynomial{}) return "characteristic 2";
    }
    return {};
  });
  add("gf2: rank invariants", [N]() -> Failure {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 10 * N; ++t) {
      std::size_t r = 1 + rng() % 9, c = 1 + rng() % 9;
      BitMatrix m(r, c), mt(c, r);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
          if (rng() & 1) {
            m.set(i, j);
            mt.set(j, i);
          }
      auto k = rank_gf2(m);
      if (k != rank_gf2(mt)) return "row rank != column rank";
      if (k > std::min(r, c)) return "rank above min dimension";
    }
    if (rank_gf2(BitMatrix::identity(17)) != 17) return "identity rank";
    return {};
  });
  add("gf2: graded vector respects its bound", [N]() -> Failure {
    GradedVector v(N);
    v.add(N, "top");
    try {
      v.add(N + 1, "over");
      return "accepted a class above the bound";
    } catch (const std::invalid_argument&) {
    }
    return {};
  });

  // --- ro2 grading ---
  add("ro2: degree group laws and text round trip", [N]() -> Failure {
    for (int p = -N; p <= N; ++p)
      for (int q = -N; q <= N; ++q) {
        RODegree d{p, q};
        if (parse_degree(to_string(d)) != d) return "round trip of " + to_string(d);
        if (d + (-d) != RODegree{}) return "inverse";
        if (dimension(d + RODegree{1, 1}) != dimension(d) + 2) return "dimension";
        if (convert(convert(d, Grading::cohomological, Grading::homological), Grading::homological,
                    Grading::cohomological) != d)
          return "grading convention round trip";
      }
    return {};
  });

  // --- coefficients ---
  add("coefficients: one basis monomial per nonzero chart position", [N]() -> Failure {
    int R = std::max(2 * N, 20);
    std::vector<CoeffMono> all;
    for (int i = 0; i <= 3 * R; ++i)
      for (int j = 0; j <= 3 * R; ++j) {
        all.push_back(CoeffMono::pos(i, j));
        if (j >= 2) all.push_back(CoeffMono::neg(i, j));
      }
    for (int p = -R; p <= R; ++p)
      for (int q = -R; q <= R; ++q) {
        RODegree d{p, q};
        auto n = std::count_if(all.begin(), all.end(), [&](const CoeffMono& m) { return m.degree() == d; });
        if (n != (chart_shape(d) == Shape::zero ? 0 : 1)) return "degree " + to_string(d);
        if (auto b = hf_basis(d); b && b->degree() != d) return "hf_basis degree " + to_string(d);
      }
    return {};
  });
  add("coefficients: Mackey relations and L- never charted", [N]() -> Failure {
    for (auto s : {Shape::zero, Shape::dot, Shape::fbar, Shape::l, Shape::l_minus})
      if (!MackeyShape::make(s).satisfies_relations()) return shape_token(s);
    for (int p = -N; p <= N; ++p)
      for (int q = -N; q <= N; ++q)
        if (chart_shape({p, q}) == Shape::l_minus) return "L- at " + to_string(RODegree{p, q});
    return {};
  });
  add("coefficients: ring axioms and grading", [N]() -> Failure {
    std::mt19937_64 rng(21);
    auto rnd = [&] {
      int i = static_cast<int>(rng() % (N + 1)), j = static_cast<int>(rng() % (N + 1));
      if (rng() % 2) return CoeffElem(CoeffMono::pos(i, j));
      return CoeffElem(CoeffMono::neg(i, j + 2));
    };
    for (int t = 0; t < 50 * N; ++t) {
      auto x = rnd(), y = rnd(), z = rnd();
      if ((x * y) * z != x * (y * z)) return "associativity";
      if (x * y != y * x) return "commutativity";
      if (x * (y + z) != x * y + x * z) return "distributivity";
      auto xy = x * y;
      if (!xy.is_zero() && *xy.degree() != *x.degree() + *y.degree()) return "grading";
      if (!x.terms()[0].theta || !y.terms()[0].theta) continue;
      if (!xy.is_zero()) return "theta squared nonzero";
    }
    return {};
  });
  add("coefficients: multiplication by a realises the chart arrows", [N]() -> Failure {
    CoeffElem a(CoeffMono::pos(1, 0));
    for (int p = -N; p <= N; ++p)
      for (int q = -N; q <= N; ++q) {
        RODegree d{p, q};
        auto h = hf_basis(d);
        if (!h) continue;
        bool nonzero = !(a * CoeffElem(*h)).is_zero();
        Shape s = chart_shape(d), t = chart_shape(d + RODegree::alpha());
        bool arrow = (s == Shape::fbar && t == Shape::dot) || (s == Shape::dot && t == Shape::dot) ||
                     (s == Shape::dot && t == Shape::l);
        if (nonzero != arrow) return "at " + to_string(d);
      }
    return {};
  });
  add("coefficients: restriction is a ring map", [N]() -> Failure {
    std::vector<CoeffElem> xs;
    for (int i = 0; i <= 3; ++i)
      for (int j = 0; j <= N; ++j) {
        xs.emplace_back(CoeffMono::pos(i, j));
        xs.emplace_back(CoeffMono::neg(i, j + 2));
      }
    for (const auto& x : xs)
      for (const auto& y : xs) {
        auto rx = restriction(x), ry = restriction(y), rxy = restriction(x * y);
        std::optional<int> expect;
        if (rx && ry) expect = *rx + *ry;
        if (rxy != expect) return to_string(x) + " * " + to_string(y);
      }
    return {};
  });
  add("coefficients: pure-space vanishing", [N]() -> Failure {
    std::vector<ModuleGenerator> gens;
    for (int n = 0; n <= N; ++n) gens.push_back({"x" + std::to_string(n), RODegree::diagonal(n)});
    GradedFreeModule f(CoefficientRing::hf(), gens);
    for (int n = 0; n <= N; ++n)
      if (f.dim(RODegree::diagonal(n) + RODegree{1, 0}) != 0) return "level " + std::to_string(n);
    return {};
  });
  add("coefficients: Laurent rings and geometric shadow", [N]() -> Failure {
    for (int p = -N; p <= N; ++p)
      for (int q = -N; q <= N; ++q) {
        RODegree d{p, q};
        if (CoefficientRing::borel().basis(d).has_value() != (p + q >= 0)) return "Borel basis";
        if (CoefficientRing::geometric().basis(d).has_value() != (p <= 0)) return "geometric basis";
        if (free_sphere_cohomology(3).basis(d).has_value() != (p + q >= 0 && p + q < 3))
          return "free sphere basis";
      }
    for (int i = 0; i <= N; ++i)
      for (int j = 0; j <= N; ++j) {
        CoeffElem x(CoeffMono::pos(i, j)), y(CoeffMono::pos(j, i));
        if (phi_shadow(x * y) != phi_shadow(x) * phi_shadow(y)) return "shadow multiplicative";
        if (!phi_shadow(CoeffElem(CoeffMono::neg(i, j + 2))).is_zero()) return "theta survives";
        if (!pr(phi_shadow(x), j) || pr(phi_shadow(x), j + 1)) return "pr_k";
      }
    return {};
  });
  add("coefficients: tensor with trivial cohomology", []() -> Failure {
    GradedVector s1(1);
    s1.add(0, "1");
    s1.add(1, "s1");
    auto m = tensor_with_trivial(GradedFreeModule::ring_itself(CoefficientRing::hf()), s1);
    auto b = m.basis(RODegree::alpha());
    if (b.size() != 2) return "expected two classes in degree alpha";
    if (m.basis({1, 0}).size() != 1) return "degree 1";
    return {};
  });

  // --- classical Steenrod ---
  UnstableAlgebra poly3({{"t1", 1}, {"t2", 1}, {"t3", 1}}, {}, {}, std::max(N, 12));
  add("steenrod: Cartan formula", [poly3, N]() -> Failure {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 4 * N; ++t) {
      auto x = poly3.reduce(Polynomial(random_poly(rng, 3, 2, 1).terms().at(0)));
      auto y = poly3.reduce(Polynomial(random_poly(rng, 3, 2, 1).terms().at(0)));
      int d = *poly3.degree(x) + *poly3.degree(y);
      for (int k = 0; 2 * d >= d + k && d + k <= poly3.bound(); ++k) {
        Polynomial rhs;
        for (int i = 0; i <= k; ++i) rhs += poly3.multiply(poly3.sq(i, x), poly3.sq(k - i, y));
        if (poly3.sq(k, poly3.multiply(x, y)) != rhs) return "Sq^" + std::to_string(k);
      }
    }
    return {};
  });
  add("steenrod: instability", [poly3]() -> Failure {
    for (int d = 0; 2 * d <= poly3.bound(); ++d)
      for (const auto& m : poly3.basis(d)) {
        Polynomial x(m);
        if (poly3.sq(d, x) != poly3.multiply(x, x)) return "top square " + poly3.format(x);
        if (!poly3.sq(d + 1, x).is_zero()) return "Sq above degree";
      }
    return {};
  });
  add("steenrod: Adem spot check", []() -> Failure {
    auto r = adem_spotcheck();
    if (!r.ok) return r.violation;
    return {};
  });
  add("steenrod: Steinberg map injective on RP^n", [N]() -> Failure {
    for (int n = 1; n <= std::max(2, N / 2 + 1); ++n) {
      auto rp = rp_algebra(n);
      for (int d = 0; d <= n; ++d)
        if (steinberg_rank(rp, d) != static_cast<std::size_t>(rp.dim(d)))
          return "RP^" + std::to_string(n) + " degree " + std::to_string(d);
    }
    return {};
  });
  add("steenrod: R H(RP^n) series equals H(CP^n)[b]", [N]() -> Failure {
    int top = std::min(N, 12);
    for (int n = 1; n <= 6; ++n) {
      RModule R(rp_algebra(n), top);
      int borel = 0;
      for (int d = 0; d <= top; ++d) {
        if (d % 2 == 0 && d <= 2 * n) ++borel;
        if (R.dim(d) != borel) return "n=" + std::to_string(n) + " degree " + std::to_string(d);
      }
    }
    return {};
  });
  add("steenrod: R M closed under b", [N]() -> Failure {
    auto rp = rp_algebra(3);
    RModule R(rp, N);
    for (int d = 0; d < N; ++d)
      for (const auto& y : R.basis(d))
        if (!R.contains(b_times(y, 1))) return "degree " + std::to_string(d);
    return {};
  });
  add("steenrod: doubling, Sq_0 and rho_1", [N]() -> Failure {
    auto rp = std::make_shared<const UnstableAlgebra>(rp_algebra(std::max(N / 2, 2)));
    DoubledModule phi(rp);
    RModule R(*rp, std::min(N, rp->bound()));
    for (int n = 0; 2 * n <= R.bound(); ++n)
      for (const auto& m : rp->basis(n)) {
        Polynomial x(m);
        for (int i = 0; n + i <= rp->bound(); ++i) {
          if (phi.sq(2 * i, x) != rp->sq(i, x)) return "even square";
          if (!phi.sq(2 * i + 1, x).is_zero()) return "odd square";
        }
        if (sq0(*rp, x) != rp->multiply(x, x)) return "Sq_0";
        if (R.rho1(steinberg(*rp, x)) != x) return "rho_1 St";
        if (2 * n < R.bound() && R.rho1(b_times(steinberg(*rp, x), 1)) != Polynomial{}) return "rho_1 b St";
      }
    return {};
  });

  // --- equivariant dual Steenrod algebra ---
  add("dual: tau_i^2 relation for i <= 4", []() -> Failure {
    for (int i = 0; i <= 4; ++i) {
      auto got = normal_form(EqElement(EqMonomial::tau_gen(i, 2)));
      auto want = EqElement::from_terms(
          {EqMonomial::coefficient(1, 0) * EqMonomial::tau_gen(i + 1),
           EqMonomial::coefficient(1, 0) * EqMonomial::tau_gen(0) * EqMonomial::xi_gen(i + 1),
           EqMonomial::coefficient(0, 1) * EqMonomial::xi_gen(i + 1)});
      if (got != want) return "i=" + std::to_string(i) + ": " + to_string(got);
    }
    return {};
  });
  add("dual: confluence under random rewrite orders", [N]() -> Failure {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 50 * N; ++t) {
      EqElement w(random_word(rng, 20));
      auto base = normal_form(w);
      auto again = normal_form(w, &rng);
      if (base != again) return to_string(w);
      for (const auto& m : base.terms())
        if (degree(m) != degree(w.terms()[0])) return "degree drift in " + to_string(w);
    }
    return {};
  });
  add("dual: coassociativity and counit", [N]() -> Failure {
    std::vector<EqElement> tests;
    for (int i = 1; i <= 2; ++i) tests.emplace_back(EqMonomial::xi_gen(i));
    for (int i = 0; i <= 2; ++i) tests.emplace_back(EqMonomial::tau_gen(i));
    std::mt19937_64 rng(42);
    for (int t = 0; t < 2 * N; ++t) tests.push_back(normal_form(EqElement(random_word(rng, 16))));
    for (const auto& x : tests) {
      if (coproduct_left_iterate(x) != coproduct_right_iterate(x)) return "coassociativity on " + to_string(x);
      auto d = coproduct(x);
      if (counit_left(d) != x || counit_right(d) != x) return "counit on " + to_string(x);
    }
    return {};
  });
  add("dual: coproduct respects the tau relation", []() -> Failure {
    for (int i = 0; i <= 2; ++i) {
      auto dt = coproduct(EqElement(EqMonomial::tau_gen(i)));
      if (tensor_multiply(dt, dt) != coproduct(normal_form(EqElement(EqMonomial::tau_gen(i, 2)))))
        return "i=" + std::to_string(i);
    }
    return {};
  });
  add("dual: psi multiplicative and homogeneous", [N]() -> Failure {
    auto z = psi_generator(1);
    std::vector<EqElement> powers{EqElement::one()};
    for (int k = 1; k <= N; ++k) powers.push_back(multiply(powers.back(), z));
    for (int j = 0; j <= N; ++j)
      for (int k = 0; j + k <= N; ++k)
        if (multiply(powers[j], powers[k]) != powers[j + k]) return "j=" + std::to_string(j);
    for (int n = 1; n <= 4; ++n)
      for (const auto& m : psi_generator(n).terms())
        if (dimension(degree(m)) != (1 << n) - 1) return "psi(zeta_" + std::to_string(n) + ")";
    return {};
  });
  add("dual: quotient image of psi(zeta_1^n) is P_n + Q_n t0", [N]() -> Failure {
    auto z = psi_generator(1);
    EqElement pw = EqElement::one();
    for (int n = 0; n <= N; ++n) {
      std::vector<EqMonomial> bar;
      for (const auto& m : pw.terms()) {
        bool in_ideal = m.xi.size() > 1 || m.tau.size() > 1;
        if (!in_ideal) bar.push_back(m);
      }
      auto pq = p_sequence(n);
      std::vector<EqMonomial> expect(pq.p.terms().begin(), pq.p.terms().end());
      for (const auto& m : pq.q.terms()) expect.push_back(m * EqMonomial::tau_gen(0));
      if (EqElement::from_terms(bar) != EqElement::from_terms(expect)) return "n=" + std::to_string(n);
      pw = multiply(pw, z);
    }
    return {};
  });
  add("dual: pairing closed form", [N]() -> Failure {
    auto z = psi_generator(1);
    EqElement pw = EqElement::one();
    for (int k = 0; k <= std::min(2 * N, 20); ++k) {
      for (int i = 0; i <= std::min(N, 10); ++i)
        if (pair(EqMonomial::xi_gen(1, i), pw) != pairing_closed_form(i, k) ||
            pair(EqMonomial::xi_gen(1, i), p_sequence(k).p) != pairing_closed_form(i, k))
          return "i=" + std::to_string(i) + " k=" + std::to_string(k);
      pw = multiply(pw, z);
    }
    return {};
  });
  add("dual: coefficient action mod u", [N]() -> Failure {
    int top = std::min(N, 8);
    for (int l = 0; l <= top; ++l)
      for (int k = 1; k <= top; ++k) {
        if (!reduce_mod_u(act_on_coefficient({l + 1, false}, k)).is_zero()) return "xi part";
        CoeffElem expect = l == k - 1 ? CoeffElem(CoeffMono::pos(2 * k - 1, 0)) : CoeffElem{};
        if (reduce_mod_u(act_on_coefficient({l, true}, k)) != expect) return "tau part";
      }
    return {};
  });
  add("dual: Cartan and pairing routes agree with the recursion", [N]() -> Failure {
    int top = std::min(N, 8);
    for (int l = 0; l <= top; ++l)
      for (int k = 0; k <= top; ++k)
        for (bool t : {false, true}) {
          DualOp op{l, t};
          auto r = act_on_coefficient(op, k);
          if (act_on_coefficient_cartan(op, k) != r) return "Cartan " + op.name();
          if (act_on_coefficient_pairing(op, k) != r) return "pairing " + op.name();
        }
    return {};
  });
  add("dual: action on trivial spectra", [N]() -> Failure {
    auto rp = rp_algebra(std::max(N, 6), "t");
    for (int l = 0; 2 * l + 1 <= N; ++l)
      for (bool t : {false, true})
        for (int n = 1; n + 2 * l + 1 <= rp.bound(); ++n) {
          DualOp op{l, t};
          Polynomial y = rp.power(rp.generator("t"), n);
          auto act = act_on_trivial(op, rp, y);
          Polynomial restricted;
          for (const auto& [c, cls] : act)
            if (c.a == 0) restricted += cls;
          if (restricted != rp.sq(restrict_operation(op.monomial()), y)) return "restriction " + op.name();
          // route through psi(zeta_1^k)
          TrivialClass via_psi;
          EqElement pw = EqElement::one();
          for (int k = 0; k <= 2 * l + 1; ++k) {
            for (const auto& c : pair(op.monomial(), pw).terms()) {
              auto s = rp.sq(k, y);
              if (s.is_zero()) continue;
              via_psi[c] += s;
              if (via_psi[c].is_zero()) via_psi.erase(c);
            }
            pw = multiply(pw, psi_generator(1));
          }
          if (via_psi != act) return "psi route " + op.name();
        }
    return {};
  });

  // --- frames ---
  add("frames: built-in models pass every frame check", [N]() -> Failure {
    for (const auto& name : builtin_model_names()) {
      auto m = builtin_model(name);
      if (m.bound > 2 * N && name.find('x') != std::string::npos) continue;
      auto r = build_frame(m);
      if (!r.pass()) return model_failure(r);
    }
    return {};
  });
  add("frames: spheres have no lower terms", []() -> Failure {
    for (int n = 1; n <= 8; ++n) {
      auto m = sphere_model(n);
      auto r = build_frame(m);
      for (const auto& row : r.rows)
        if (row.r_sigma != b_times(BPolynomial::from_coefficient(row.kappa[0], 0), row.m))
          return m.name;
    }
    return {};
  });
  add("frames: mutations are detected", []() -> Failure {
    auto m = cp_product_model(1, 1);
    auto r = build_frame(m);
    auto x1 = Monomial::generator(0), x2 = Monomial::generator(1);
    std::swap(r.kappa0[x1], r.kappa0[x2]);
    if (verify_conjugation_equation(r).pass) return "swapped kappa0 passed";
    auto bad = cp_model(2);
    bad.kappa0[Monomial::generator(0, 2)] = Polynomial{};
    if (build_frame(bad).pass()) return "rank deficient kappa0 passed";
    return {};
  });
  add("frames: removing a generator breaks the splitting", [N]() -> Failure {
    for (int n = 1; n <= std::min(N / 2, 4); ++n) {
      auto m = cp_model(n);
      auto r = build_frame(m);
      auto f = purity_check(m).module;
      if (!nakayama_splitting_check(m, r, f).pass) return "intact " + m.name;
      for (std::size_t i = 0; i < f.generators().size(); ++i) {
        auto g = f;
        g.remove_generator(i);
        if (nakayama_splitting_check(m, r, g).pass) return m.name + " without " + f.generators()[i].name;
      }
    }
    return {};
  });
  add("frames: diagonal vanishing and lifting", [N]() -> Failure {
    for (int n = 1; n <= 4; ++n) {
      auto m = cp_model(n);
      auto f = purity_check(m).module;
      for (int k = 0; k <= N; ++k)
        if (!module_cohomology(f, RODegree::diagonal(k) + RODegree{1, 0}).empty()) return "vanishing";
      for (int k = 0; k <= n; ++k) {
        Polynomial x = m.even.power(m.even.generator("x"), k);
        auto res = restrict_to_underlying(f, lift_diagonal_class(m, f, x));
        if (res.size() != 1 || res[0].first != k || Polynomial(res[0].second) != x) return "lift";
      }
    }
    return {};
  });
  add("frames: model JSON round trip", []() -> Failure {
    for (const auto& name : builtin_model_names()) {
      auto m = builtin_model(name);
      auto back = model_from_json(model_to_json(m));
      if (model_to_json(back) != model_to_json(m) || back.kappa0 != m.kappa0) return name;
    }
    return {};
  });
  return checks;
}

}  // namespace

std::vector<SelftestResult> run_selftest(int bound, int jobs) {
  auto checks = make_checks(bound);
  std::vector<SelftestResult> results(checks.size());
  auto run_one = [&](std::size_t i) {
    SelftestResult r{checks[i].name, false, ""};
    try {
      auto f = checks[i].run();
      r.pass = !f.has_value();
      if (f) r.detail = *f;
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    results[i] = std::move(r);
  };
  jobs = std::max(1, jobs);
  for (std::size_t start = 0; start < checks.size(); start += static_cast<std::size_t>(jobs)) {
    std::vector<std::future<void>> batch;
    for (std::size_t i = start; i < std::min(checks.size(), start + jobs); ++i)
      batch.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async, run_one, i));
    for (auto& f : batch) f.get();
  }
  return results;
}

}  // namespace c2coh
