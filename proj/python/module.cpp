#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "c2coh/cli.hpp"
#include "c2coh/coefficients.hpp"
#include "c2coh/dual_steenrod.hpp"
#include "c2coh/errors.hpp"
#include "c2coh/expression.hpp"
#include "c2coh/frames.hpp"
#include "c2coh/model_io.hpp"
#include "c2coh/models.hpp"
#include "c2coh/selftest.hpp"

namespace py = pybind11;
using namespace c2coh;

namespace {

SpaceModel model_arg(const std::string& spec) {
  if (spec.rfind("builtin:", 0) == 0) return builtin_model(spec.substr(8));
  if (!spec.empty() && spec.front() == '{') return load_model_text(spec);
  return load_model(spec);
}

}  // namespace

PYBIND11_MODULE(c2coh, m) {
  m.doc() = "exact C2-equivariant mod 2 cohomology";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ModelError>(m, "ModelError", PyExc_ValueError);
  py::register_exception<DegreeOverflow>(m, "DegreeOverflow", PyExc_OverflowError);

  m.def("chart_shape", [](int p, int q) { return shape_token(chart_shape({p, q})); }, py::arg("p"),
        py::arg("q"));
  m.def("chart_csv", &emit_chart_csv, py::arg("pmin"), py::arg("pmax"), py::arg("qmin"), py::arg("qmax"));
  m.def("coeff", [](const std::string& s) { return to_string(parse_coefficient(s)); });
  m.def("normalize", [](const std::string& s) { return to_string(normal_form(parse_eq_expression(s))); });
  m.def("coproduct",
        [](const std::string& s) { return to_string(coproduct(normal_form(parse_eq_expression(s)))); });
  m.def("psi", [](int n) { return to_string(psi_generator(n)); });
  m.def("pn", [](int n) {
    auto pq = p_sequence(n);
    return py::make_tuple(to_string(pq.p), to_string(pq.q));
  });
  m.def("pair", [](const std::string& mono, const std::string& expr) {
    return to_string(pair(parse_eq_monomial(mono), normal_form(parse_eq_expression(expr))));
  });

  m.def("builtin_models", &builtin_model_names);
  m.def(
      "frame_check",
      [](const std::string& spec) {
        auto model = model_arg(spec);
        return report_to_json(model, build_frame(model)).dump();
      },
      py::arg("model"), "JSON report for a model path, JSON text or builtin:NAME");
  m.def(
      "model_json", [](const std::string& name) { return model_to_json(builtin_model(name)).dump(); },
      py::arg("name"));

  m.def(
      "selftest",
      [](int bound, int jobs) {
        py::list out;
        for (const auto& r : run_selftest(bound, jobs)) out.append(py::make_tuple(r.name, r.pass, r.detail));
        return out;
      },
      py::arg("bound") = 10, py::arg("jobs") = 1);

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "run the command line front end; returns (exit code, stdout, stderr)");
}
