#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nullforge/catalog.hpp"
#include "nullforge/cli.hpp"
#include "nullforge/null_repr.hpp"
#include "nullforge/surfaces.hpp"

namespace py = pybind11;
using namespace nullforge;

namespace {

std::vector<double> to_list(const PEVector& v) {
  std::vector<double> out(static_cast<std::size_t>(v.dim()));
  for (int i = 0; i < v.dim(); ++i) out[static_cast<std::size_t>(i)] = v[i];
  return out;
}

ReprData42 data42_from_strings(const std::string& p11, const std::string& p12,
                               const std::string& p21, const std::string& p22) {
  return {{ScalarFn::parse(p11), ScalarFn::parse(p12)},
          {ScalarFn::parse(p21), ScalarFn::parse(p22)}};
}

ReprData31 data31_from_strings(const std::string& p12, const std::string& p21,
                               const std::string& p22, double xi0, double C) {
  return {ScalarFn::parse(p12), ScalarFn::parse(p21), ScalarFn::parse(p22),
          xi0, C};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "null curves and minimal timelike translation surfaces in E42/E31";

  // Translators run newest-first, so the base class goes first and the
  // derived ones shadow it.
  py::register_exception<Error>(m, "NullforgeError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "DslParseError", PyExc_ValueError);
  py::register_exception<ConstraintError>(m, "ConstraintError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ExampleConfigError", PyExc_ValueError);
  py::register_exception<DegenerateWronskianError>(m, "DegenerateWronskianError",
                                                   PyExc_ArithmeticError);
  py::register_exception<QuadratureError>(m, "QuadratureError",
                                          PyExc_ArithmeticError);

  py::class_<ScalarFn>(m, "Expr")
      .def(py::init(&ScalarFn::parse), py::arg("source"))
      .def("__call__", [](const ScalarFn& f, double x) { return f(x); })
      .def("derivative", [](const ScalarFn& f) { return f.derivative(); })
      .def("__str__", &ScalarFn::to_string)
      .def("__repr__",
           [](const ScalarFn& f) { return "Expr('" + f.to_string() + "')"; });
  m.def("parse", &ScalarFn::parse, py::arg("source"),
        "Parse a one-variable DSL expression");

  py::class_<CurveEvaluator>(m, "Curve")
      .def_property_readonly("dimension",
                             [](const CurveEvaluator& c) {
                               return dimension(c.signature);
                             })
      .def("position",
           [](const CurveEvaluator& c, double xi) { return to_list(c.position(xi)); })
      .def("derivative", [](const CurveEvaluator& c, double xi) {
        return to_list(c.derivative(xi));
      });

  m.def(
      "example_curve",
      [](const std::string& name, const Params& params) {
        return make_evaluator(build_curve_example(name, params).closed_form);
      },
      py::arg("name"), py::arg("params") = Params{},
      "Closed-form catalog curve by name");
  m.def("list_examples", &list_examples);
  m.def("describe_example", &describe_example, py::arg("name"));

  m.def(
      "forward_e42",
      [](const std::string& p11, const std::string& p12, const std::string& p21,
         const std::string& p22) {
        ReprData42 d = data42_from_strings(p11, p12, p21, p22);
        return make_evaluator(d);
      },
      py::arg("P11"), py::arg("P12"), py::arg("P21"), py::arg("P22"),
      "Null curve in E42 from four DSL expressions");
  m.def(
      "forward_e31",
      [](const std::string& p12, const std::string& p21, const std::string& p22,
         double xi0, double C) {
        ReprData31 d = data31_from_strings(p12, p21, p22, xi0, C);
        return make_evaluator(d);
      },
      py::arg("P12"), py::arg("P21"), py::arg("P22"), py::arg("xi0") = 0.0,
      py::arg("C") = 0.0, "Null curve in E31 from three DSL expressions");

  m.def(
      "surface_point",
      [](const std::string& name, double xi1, double xi2) {
        return to_list(build_surface_example(name).closed_form_surface().eval(xi1, xi2));
      },
      py::arg("name"), py::arg("xi1"), py::arg("xi2"));
  m.def(
      "verify_minimality",
      [](const std::string& name, double tol, int n) {
        GridSpec grid{-1, 1, -1, 1, n, n};
        MinimalityReport rep = verify_minimality(
            build_surface_example(name).closed_form_surface(), grid, tol);
        py::dict out;
        out["max_residual"] = rep.max_residual;
        out["worst_xi1"] = rep.worst_xi1;
        out["worst_xi2"] = rep.worst_xi2;
        out["worst_direction"] = rep.worst_direction;
        out["pass"] = rep.pass;
        return out;
      },
      py::arg("name"), py::arg("tol") = 1e-8, py::arg("grid") = 21);

  m.def("run", &run_command, py::arg("args"),
        "Run a CLI command; returns the exit code");
}
