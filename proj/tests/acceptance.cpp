// One line per acceptance criterion: PASS/FAIL, elapsed time, limit.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sys/wait.h>

#include "oracles.hpp"

#include "c2coh/coefficient_action.hpp"
#include "c2coh/coefficients.hpp"
#include "c2coh/dual_steenrod.hpp"
#include "c2coh/frames.hpp"
#include "c2coh/model_io.hpp"
#include "c2coh/models.hpp"
#include "c2coh/steinberg.hpp"

using namespace c2coh;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

EqMonomial random_monomial(std::mt19937_64& rng, int max_dim) {
  // random exponents on a, u, tau_0..tau_3, xi_1..xi_3, kept under max_dim
  EqMonomial m = EqMonomial::coefficient(static_cast<int>(rng() % 3), static_cast<int>(rng() % 3));
  std::uniform_int_distribution<int> pick(0, 6);
  for (int step = 0; step < 16; ++step) {
    int g = pick(rng);
    EqMonomial f = g < 4 ? EqMonomial::tau_gen(g) : EqMonomial::xi_gen(g - 3);
    EqMonomial next = m * f;
    if (generator_dimension(next) <= max_dim) m = next;
  }
  return m;
}

Outcome chart_consistency() {
  for (int p = -20; p <= 20; ++p)
    for (int q = -20; q <= 20; ++q) {
      int count = 0;
      for (int i = 0; i <= 60; ++i)
        for (int j = 0; j <= 60; ++j) {
          count += CoeffMono::pos(i, j).degree() == RODegree{p, q};
          if (j >= 2) count += CoeffMono::neg(i, j).degree() == RODegree{p, q};
        }
      int indicator = chart_lookup({p, q}).tag == Shape::zero ? 0 : 1;
      if (count != indicator || oracle::chart_token(p, q) != shape_token(chart_shape({p, q})))
        return fail("degree " + to_string(RODegree{p, q}));
    }
  return {true, "1681 degrees"};
}

Outcome relation_engine() {
  for (int i = 0; i <= 4; ++i) {
    auto want = EqElement::from_terms({EqMonomial::coefficient(1, 0) * EqMonomial::tau_gen(i + 1),
                                       EqMonomial::coefficient(1, 0) * EqMonomial::tau_gen(0) *
                                           EqMonomial::xi_gen(i + 1),
                                       EqMonomial::coefficient(0, 1) * EqMonomial::xi_gen(i + 1)});
    if (normal_form(EqElement(EqMonomial::tau_gen(i, 2))) != want) return fail("tau_" + std::to_string(i));
  }
  std::mt19937_64 rng(2024);
  int words = 0;
  for (; words < 600; ++words) {
    EqElement w(random_monomial(rng, 20));
    auto base = normal_form(w);
    for (int r = 0; r < 3; ++r)
      if (normal_form(w, &rng) != base) return fail("order dependence on " + to_string(w));
  }
  return {true, std::to_string(words) + " words, 3 random orders each"};
}

Outcome hopf_axioms() {
  std::vector<EqElement> xs{EqElement(EqMonomial::xi_gen(1)), EqElement(EqMonomial::xi_gen(2)),
                            EqElement(EqMonomial::tau_gen(0)), EqElement(EqMonomial::tau_gen(1)),
                            EqElement(EqMonomial::tau_gen(2))};
  std::mt19937_64 rng(77);
  while (xs.size() < 25) {
    auto m = random_monomial(rng, 16);
    if (m.is_coefficient()) continue;
    xs.push_back(normal_form(EqElement(m)));
  }
  for (const auto& x : xs) {
    if (coproduct_left_iterate(x) != coproduct_right_iterate(x)) return fail("coassociativity: " + to_string(x));
    auto d = coproduct(x);
    if (counit_left(d) != x || counit_right(d) != x) return fail("counit: " + to_string(x));
  }
  return {true, std::to_string(xs.size()) + " elements"};
}

Outcome action_mod_u() {
  for (int l = 0; l <= 8; ++l)
    for (int k = 1; k <= 8; ++k) {
      CoeffElem want = l == k - 1 ? CoeffElem(CoeffMono::pos(2 * k - 1, 0)) : CoeffElem{};
      if (reduce_mod_u(act_on_coefficient({l, true}, k)) != want)
        return fail("tau part l=" + std::to_string(l) + " k=" + std::to_string(k));
      if (!reduce_mod_u(act_on_coefficient({l + 1, false}, k)).is_zero())
        return fail("xi part l+1=" + std::to_string(l + 1) + " k=" + std::to_string(k));
    }
  return {true, "l, k <= 8"};
}

Outcome pairing_against_p() {
  EqElement pw = EqElement::one();
  for (int k = 0; k <= 20; ++k) {
    auto pk = p_sequence(k).p;
    auto mini = oracle::mini_pow(oracle::zeta1(), k);
    for (int i = 0; i <= 10; ++i) {
      auto closed = pairing_closed_form(i, k);
      auto via_nf = pair(EqMonomial::xi_gen(1, i), pw);
      auto via_p = pair(EqMonomial::xi_gen(1, i), pk);
      if (via_nf != closed || via_p != closed || oracle::to_set(closed) != oracle::mini_coefficient(mini, i, 0))
        return fail("i=" + std::to_string(i) + " k=" + std::to_string(k));
    }
    pw = multiply(pw, psi_generator(1));
  }
  return {true, "i <= 10, k <= 20, three pipelines"};
}

Outcome psi_soundness() {
  std::vector<EqElement> pows;
  for (int n = 0; n <= 10; ++n) pows.push_back(psi(ZetaMonomial{{n}}));
  for (int j = 0; j <= 10; ++j)
    for (int k = 0; j + k <= 10; ++k)
      if (multiply(pows[j], pows[k]) != pows[j + k])
        return fail("j=" + std::to_string(j) + " k=" + std::to_string(k));
  for (int n = 1; n <= 4; ++n)
    for (const auto& m : psi_generator(n).terms())
      if (dimension(degree(m)) != (1 << n) - 1) return fail("psi(zeta_" + std::to_string(n) + ")");
  return {true, "exponent <= 10, n <= 4"};
}

std::vector<SpaceModel> cp_family() {
  std::vector<SpaceModel> out;
  for (int n = 1; n <= 8; ++n) out.push_back(cp_model(n));
  for (int a = 1; a <= 6; ++a)
    for (int b = a; a + b <= 6; ++b) out.push_back(cp_product_model(a, b));
  return out;
}

Outcome franz_puppe() {
  int count = 0;
  for (const auto& m : cp_family()) {
    if (m.bound > 16) return fail(m.name + " bound above 16");
    auto v = verify_franz_puppe(m, build_frame(m));
    if (!v.pass) return fail(m.name + ": " + v.witness);
    ++count;
  }
  return {true, std::to_string(count) + " models"};
}

Outcome conjugation_equation() {
  for (const auto& m : builtin_models()) {
    auto v = verify_conjugation_equation(build_frame(m));
    if (!v.pass) return fail(m.name + ": " + v.witness);
  }
  for (int n = 1; n <= 8; ++n) {
    auto m = sphere_model(n);
    auto r = build_frame(m);
    for (const auto& row : r.rows)
      if (row.r_sigma != b_times(BPolynomial::from_coefficient(row.kappa[0], 0), row.m))
        return fail(m.name + ": lower terms");
  }
  int mutants = 0;
  for (const auto& m : builtin_models()) {
    auto r = build_frame(m);
    for (auto& [x, y] : r.kappa0) {
      if (x.is_one()) continue;
      auto deg = m.even.degree(x) / 2;
      auto saved = y;
      // corrupt: add another basis class of the same degree, or zero it
      Polynomial other;
      for (const auto& c : m.fixed.basis(deg))
        if (!saved.contains(c)) {
          other = Polynomial(c);
          break;
        }
      y = other.is_zero() ? Polynomial{} : saved + other;
      bool caught = !verify_conjugation_equation(r).pass;
      y = saved;
      if (!caught) return fail(m.name + ": mutation of " + m.even.format(x) + " not caught");
      ++mutants;
    }
  }
  return {true, std::to_string(mutants) + " mutants caught"};
}

Outcome purity_round_trip() {
  int removed = 0;
  for (const auto& m : builtin_models()) {
    auto p = purity_check(m);
    if (!p.pure) return fail(m.name + ": " + p.failure);
    auto r = build_frame(m);
    if (!nakayama_splitting_check(m, r, p.module).pass) return fail(m.name + ": splitting");
    for (std::size_t i = 0; i < p.module.generators().size(); ++i) {
      auto g = p.module;
      g.remove_generator(i);
      if (nakayama_splitting_check(m, r, g).pass) return fail(m.name + ": removal of generator survived");
      ++removed;
    }
  }
  return {true, std::to_string(removed) + " removals detected"};
}

Outcome r_functor() {
  for (int n = 1; n <= 6; ++n) {
    auto brute = oracle::r_series_rp(n, 12);
    auto lib = RModule(rp_algebra(n), 12).poincare_series();
    for (int d = 0; d <= 12; ++d) {
      int want = 0;
      for (int k = 0; 2 * k <= d && k <= n; ++k) ++want;
      if (brute[d] != want || lib[d] != want)
        return fail("RP^" + std::to_string(n) + " degree " + std::to_string(d));
    }
  }
  for (const auto& m : builtin_models()) {
    for (int d = 0; 2 * d <= m.bound; ++d) {
      if (steinberg_rank(m.fixed, d) != static_cast<std::size_t>(m.fixed.dim(d)))
        return fail("St not injective on " + m.name);
    }
  }
  return {true, "n <= 6 through degree 12"};
}

Outcome frame_uniqueness() {
  std::vector<SpaceModel> ms{sphere_model(1), model_from_json(model_to_json(cp_model(2)), 6)};
  for (const auto& m : ms) {
    std::size_t total = 1;
    for (int d = 0; d <= m.bound; d += 2)
      for (const auto& x : m.even.basis(d)) total *= oracle::count_sections_brute(m, x);
    if (total != 1) return fail(m.name + ": " + std::to_string(total) + " frames");
  }
  return {true, "S(1+al), CP2 at bound 6"};
}

Outcome cli_determinism(const std::string& cli) {
  auto run = [&](int& status) {
    std::string out;
    FILE* p = popen((cli + " selftest --bound 10").c_str(), "r");
    if (!p) return std::string("<popen failed>");
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int raw = pclose(p);
    status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return out;
  };
  int s1 = -1, s2 = -1;
  auto a = run(s1);
  auto b = run(s2);
  if (s1 != 0 || s2 != 0) return fail("exit status " + std::to_string(s1) + "/" + std::to_string(s2));
  if (a != b) return fail("outputs differ");
  return {true, "two identical runs"};
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";
  struct Criterion {
    int id;
    std::string name;
    double limit;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> all{
      {1, "coefficient ring vs chart", 1, chart_consistency},
      {2, "relation engine", 10, relation_engine},
      {3, "Hopf algebroid axioms", 30, hopf_axioms},
      {4, "coefficient action mod u", 5, action_mod_u},
      {5, "xi pairing against P_n", 10, pairing_against_p},
      {6, "psi soundness", 5, psi_soundness},
      {7, "Franz-Puppe", 30, franz_puppe},
      {8, "conjugation equation", 10, conjugation_equation},
      {9, "purity round trip", 10, purity_round_trip},
      {10, "R functor", 30, r_functor},
      {11, "frame uniqueness", 60, frame_uniqueness},
      {12, "CLI determinism", 300,
       [&] { return cli.empty() ? fail("no CLI path given") : cli_determinism(cli); }},
  };
  int failures = 0;
  for (const auto& c : all) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = o.ok && secs < c.limit;
    if (o.ok && !ok) o.note += "; over time limit";
    failures += !ok;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3fs / %.0fs", secs, c.limit);
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << " " << c.name << " [" << timing
              << "] " << o.note << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
