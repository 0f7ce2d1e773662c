#include "c2coh/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "c2coh/coefficients.hpp"
#include "c2coh/dual_steenrod.hpp"
#include "c2coh/errors.hpp"
#include "c2coh/expression.hpp"
#include "c2coh/frames.hpp"
#include "c2coh/model_io.hpp"
#include "c2coh/models.hpp"
#include "c2coh/selftest.hpp"
#include "c2coh/steinberg.hpp"

namespace c2coh {

namespace {

constexpr int kInputError = 2;

int default_bound() {
  if (const char* env = std::getenv("RO2_BOUND")) {
    try {
      std::size_t used = 0;
      int v = std::stoi(env, &used);
      if (used == std::string(env).size() && v >= 0) return v;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("RO2_BOUND is not a non-negative integer: ") + env);
  }
  return 10;
}

SpaceModel resolve_model(const std::string& spec, std::optional<int> bound) {
  const std::string prefix = "builtin:";
  if (spec.rfind(prefix, 0) == 0) {
    auto m = builtin_model(spec.substr(prefix.size()));
    if (!bound || *bound == m.bound) return m;
    return model_from_json(model_to_json(m), bound);
  }
  return load_model(spec, bound);
}

std::string slug(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (c == '(') break;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

// left aligned columns, two spaces apart
std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  std::ostringstream s;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    s << line << '\n';
  }
  return s.str();
}

std::string text_report(const SpaceModel& m, const FrameReport& r) {
  std::ostringstream s;
  s << "model " << r.model << "  bound " << m.bound << "\n\n";
  std::vector<std::vector<std::string>> rows{{"class", "degree", "kappa0", "r_sigma"}};
  for (const auto& row : r.rows)
    rows.push_back({row.name, std::to_string(2 * row.m),
                    m.fixed.format(row.kappa.empty() ? Polynomial{} : row.kappa[0]),
                    format(m.fixed, row.r_sigma)});
  s << table(rows) << '\n';
  std::vector<std::vector<std::string>> checks;
  for (const auto& v : r.verdicts) checks.push_back({v.name, v.pass ? "PASS" : "FAIL", v.witness});
  s << table(checks) << '\n' << (r.pass() ? "PASS" : "FAIL") << '\n';
  return s.str();
}

}  // namespace

std::string emit_chart_csv(int pmin, int pmax, int qmin, int qmax) {
  std::string out;
  for (int p = pmin; p <= pmax; ++p)
    for (int q = qmax; q >= qmin; --q)
      out += std::to_string(p) + "," + std::to_string(q) + "," + shape_token(chart_shape({p, q})) + "\n";
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact C2-equivariant mod 2 cohomology toolkit", "c2coh"};
  app.require_subcommand(1);
  app.fallthrough(false);

  int pmin = -3, pmax = 3, qmin = -3, qmax = 3;
  auto* chart = app.add_subcommand("chart", "coefficient chart as CSV rows p,q,shape");
  chart->add_option("--pmin", pmin);
  chart->add_option("--pmax", pmax);
  chart->add_option("--qmin", qmin);
  chart->add_option("--qmax", qmax);

  std::string expr, mono;
  int n = 0;
  auto* coeff = app.add_subcommand("coeff", "normalise a coefficient expression");
  coeff->add_option("expr", expr)->required();

  auto* asteen = app.add_subcommand("asteen", "dual equivariant Steenrod algebra");
  asteen->require_subcommand(1);
  auto* normalize = asteen->add_subcommand("normalize", "normal form");
  normalize->add_option("expr", expr)->required();
  auto* coprod = asteen->add_subcommand("coprod", "coproduct");
  coprod->add_option("expr", expr)->required();
  auto add_psi = [&](CLI::App* parent) {
    auto* c = parent->add_subcommand("psi", "psi(zeta_n)");
    c->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
    return c;
  };
  auto add_pn = [&](CLI::App* parent) {
    auto* c = parent->add_subcommand("pn", "P_n and Q_n");
    c->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
    return c;
  };
  auto add_pair = [&](CLI::App* parent) {
    auto* c = parent->add_subcommand("pair", "coefficient of MONO in EXPR");
    c->add_option("mono", mono)->required();
    c->add_option("expr", expr)->required();
    return c;
  };
  std::vector<CLI::App*> psi_cmds{add_psi(asteen), add_psi(&app)};
  std::vector<CLI::App*> pn_cmds{add_pn(asteen), add_pn(&app)};
  std::vector<CLI::App*> pair_cmds{add_pair(asteen), add_pair(&app)};

  std::string model_spec, dir, cls;
  std::optional<int> bound;
  bool as_json = false, as_text = false;
  auto* frame = app.add_subcommand("frame", "cohomology frames");
  frame->require_subcommand(1);
  auto* check = frame->add_subcommand("check", "build and verify the frame of a model");
  check->add_option("model", model_spec, "JSON file or builtin:NAME")->required();
  check->add_option("--bound", bound);
  auto* fmt = check->add_flag("--json", as_json);
  check->add_flag("--text", as_text)->excludes(fmt);
  auto add_examples = [&](CLI::App* parent) {
    auto* c = parent->add_subcommand("examples", "check the built-in models");
    c->add_option("--write", dir, "write the models as JSON into this directory");
    return c;
  };
  std::vector<CLI::App*> example_cmds{add_examples(frame), add_examples(&app)};

  auto* purity = app.add_subcommand("purity", "purity check");
  purity->add_option("model", model_spec)->required();
  purity->add_option("--bound", bound);

  auto* stein = app.add_subcommand("steinberg", "Steinberg map");
  stein->add_option("model", model_spec)->required();
  stein->add_option("--class", cls)->required();
  stein->add_option("--bound", bound);

  int jobs = 1;
  auto* selftest = app.add_subcommand("selftest", "invariant suite");
  selftest->add_option("--bound", bound);
  selftest->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kInputError;
  }

  auto used = [](const std::vector<CLI::App*>& v) {
    return std::any_of(v.begin(), v.end(), [](CLI::App* c) { return c->parsed(); });
  };

  try {
    if (chart->parsed()) {
      if (pmin > pmax || qmin > qmax) throw std::invalid_argument("empty chart range");
      out << emit_chart_csv(pmin, pmax, qmin, qmax);
      return 0;
    }
    if (coeff->parsed()) {
      auto x = parse_coefficient(expr);
      out << to_string(x) << '\n';
      if (!x.is_zero()) {
        if (x.is_homogeneous())
          out << "degree " << to_string(*x.degree()) << '\n';
        else
          out << "inhomogeneous\n";
      }
      return 0;
    }
    if (normalize->parsed()) {
      out << to_string(normal_form(parse_eq_expression(expr))) << '\n';
      return 0;
    }
    if (coprod->parsed()) {
      out << to_string(coproduct(normal_form(parse_eq_expression(expr)))) << '\n';
      return 0;
    }
    if (used(psi_cmds)) {
      out << to_string(psi_generator(n)) << '\n';
      return 0;
    }
    if (used(pn_cmds)) {
      auto pq = p_sequence(n);
      out << "P" << n << " = " << to_string(pq.p) << '\n' << "Q" << n << " = " << to_string(pq.q) << '\n';
      return 0;
    }
    if (used(pair_cmds)) {
      auto m = parse_eq_monomial(mono);
      out << to_string(pair(m, normal_form(parse_eq_expression(expr)))) << '\n';
      return 0;
    }
    if (check->parsed()) {
      auto m = resolve_model(model_spec, bound);
      auto r = build_frame(m);
      if (as_json)
        out << report_to_json(m, r).dump(2) << '\n';
      else
        out << text_report(m, r);
      return r.pass() ? 0 : 1;
    }
    if (used(example_cmds)) {
      bool all = true;
      std::vector<std::vector<std::string>> rows;
      if (!dir.empty()) std::filesystem::create_directories(dir);
      for (const auto& name : builtin_model_names()) {
        auto m = builtin_model(name);
        auto r = build_frame(m);
        all = all && r.pass();
        std::vector<std::string> row{name, r.pass() ? "PASS" : "FAIL"};
        if (!dir.empty()) {
          auto path = std::filesystem::path(dir) / (slug(name) + ".json");
          std::ofstream f(path);
          if (!f) throw std::runtime_error("cannot write " + path.string());
          f << model_to_json(m).dump(2) << '\n';
          row.push_back(path.string());
        }
        rows.push_back(row);
      }
      out << table(rows);
      return all ? 0 : 1;
    }
    if (purity->parsed()) {
      auto m = resolve_model(model_spec, bound);
      auto p = purity_check(m);
      out << "model " << m.name << '\n';
      if (!p.pure) {
        out << "not pure: " << p.failure << '\n';
        return 1;
      }
      std::vector<std::vector<std::string>> rows{{"generator", "degree", "lifts"}};
      for (const auto& g : p.module.generators())
        rows.push_back({g.name, to_string(RODegree::diagonal(g.level)), m.even.format(g.cls)});
      out << table(rows) << "pure\n";
      return 0;
    }
    if (stein->parsed()) {
      auto m = resolve_model(model_spec, bound);
      Polynomial x;
      bool in_fixed = true;
      try {
        x = m.fixed.parse(cls);
      } catch (const ParseError&) {
        in_fixed = false;
      }
      if (in_fixed) {
        out << "St(" << m.fixed.format(x) << ") = " << format(m.fixed, steinberg(m.fixed, x)) << '\n';
        return 0;
      }
      x = m.even.parse(cls);
      auto k = apply_kappa(m.kappa0, x);
      out << "kappa0(" << m.even.format(x) << ") = " << m.fixed.format(k) << '\n'
          << "r_sigma(" << m.even.format(x) << ") = " << format(m.fixed, steinberg(m.fixed, k)) << '\n';
      return 0;
    }
    if (selftest->parsed()) {
      int b = bound ? *bound : default_bound();
      auto results = run_selftest(b, jobs);
      std::size_t passed = 0;
      for (const auto& r : results) {
        out << (r.pass ? "PASS  " : "FAIL  ") << r.name;
        if (!r.pass) out << ": " << r.detail;
        out << '\n';
        passed += r.pass;
      }
      out << passed << "/" << results.size() << " checks passed at bound " << b << '\n';
      return passed == results.size() ? 0 : 1;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const ModelError& e) {
    err << "model error: " << e.what() << '\n';
    return kInputError;
  } catch (const DegreeOverflow& e) {
    err << "degree overflow: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace c2coh
