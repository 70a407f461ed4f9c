#include "nullforge/catalog.hpp"

#include <cmath>

namespace nullforge {

namespace {

const ScalarFn kX = ScalarFn::variable();

ScalarFn exp_rate(double rate) { return ScalarFn::exp(rate * kX); }

double get_param(const Params& params, const std::string& key, double fallback) {
  auto it = params.find(key);
  return it != params.end() ? it->second : fallback;
}

void reject_unknown(const Params& params, std::initializer_list<const char*> known) {
  for (const auto& [key, value] : params) {
    bool ok = false;
    for (const char* k : known)
      if (key == k) ok = true;
    if (!ok) throw ConfigError("unknown parameter '" + key + "'");
  }
}

// Exponential-row null curve in E42. Constraint: r != s.
CurveExample alpha1(const Params& params) {
  reject_unknown(params, {"p", "q", "r", "s"});
  double p = get_param(params, "p", 2), q = get_param(params, "q", 1);
  double r = get_param(params, "r", 1), s = get_param(params, "s", 0);
  if (r == s) throw ConstraintError("r != s");

  CurveExample ex;
  ex.name = "alpha1";
  ex.signature = Signature::E42;
  ex.data42 = ReprData42{{exp_rate(p), exp_rate(q)}, {exp_rate(r), exp_rate(s)}};
  double c = 1.0 / (4 * (s - r));
  ex.closed_form = {{c * ((p - s) * exp_rate(p - r) + (r - q) * exp_rate(q - s)),
                     c * ((p - r) * exp_rate(p - s) + (q - s) * exp_rate(q - r)),
                     c * ((p - s) * exp_rate(p - r) - (r - q) * exp_rate(q - s)),
                     c * ((p - r) * exp_rate(p - s) - (q - s) * exp_rate(q - r))},
                    Signature::E42};
  ex.default_interval = {-0.5, 0.5};
  return ex;
}

// Trigonometric-row null curve in E42. Constraint: q != 0.
CurveExample alpha2(const Params& params) {
  reject_unknown(params, {"p", "q"});
  double p = get_param(params, "p", 2), q = get_param(params, "q", 1);
  if (q == 0) throw ConstraintError("q != 0");

  CurveExample ex;
  ex.name = "alpha2";
  ex.signature = Signature::E42;
  ex.data42 = ReprData42{{ScalarFn::cos(p * kX), ScalarFn::sin(p * kX)},
                         {ScalarFn::cos(q * kX), ScalarFn::sin(q * kX)}};
  double c = 1.0 / (4 * q);
  ex.closed_form = {{c * (-(p + q)) * ScalarFn::cos((p - q) * kX),
                     c * (-(p + q)) * ScalarFn::sin((p - q) * kX),
                     c * (p - q) * ScalarFn::cos((p + q) * kX),
                     c * (-(p - q)) * ScalarFn::sin((p + q) * kX)},
                    Signature::E42};
  ex.default_interval = {-1.0, 1.0};
  return ex;
}

// Exponential null curve in E31 with quadrature-built P11.
// Constraints: r != s, q+s-2r != 0.
CurveExample alpha3(const Params& params, const std::string& name) {
  reject_unknown(params, {"q", "r", "s"});
  double q = get_param(params, "q", 4), r = get_param(params, "r", 2);
  double s = get_param(params, "s", 1);
  if (r == s) throw ConstraintError("r != s");
  if (q + s - 2 * r == 0) throw ConstraintError("q+s-2r != 0");

  CurveExample ex;
  ex.name = name;
  ex.signature = Signature::E31;
  ex.data31 = ReprData31{exp_rate(q), exp_rate(r), exp_rate(s), 0.0, 0.0};
  double c = (q - s) / (q + s - 2 * r);
  ex.p11_closed_form = c * exp_rate(q + s - r) - c * exp_rate(r);
  double a = (q - s) * (q - r) / ((q + s - 2 * r) * (s - r));
  double b = (r - q) / (s - r);
  ex.closed_form = {
      {0.25 * (a * exp_rate(q + s - 2 * r) + ScalarFn::constant(c) + b * exp_rate(q - s)),
       0.25 * (2 * (q - s) / (s - r)) * exp_rate(q - r),
       0.25 * (a * exp_rate(q + s - 2 * r) + ScalarFn::constant(c) - b * exp_rate(q - s))},
      Signature::E31};
  ex.default_interval = {-0.5, 0.5};
  return ex;
}

// Trigonometric null curve in E31 (P11 closed form -2(cos xi - 1)^2).
CurveExample alpha5(const Params& params) {
  reject_unknown(params, {});
  CurveExample ex;
  ex.name = "alpha5";
  ex.signature = Signature::E31;
  ex.data31 = ReprData31{ScalarFn::sin(2 * kX), ScalarFn::cos(kX),
                         ScalarFn::sin(kX), 0.0, 0.0};
  ex.p11_closed_form = -2 * (ScalarFn::cos(kX) - 1).pow(2);
  ex.closed_form = {{-1 + 1.5 * ScalarFn::cos(kX) - ScalarFn::cos(kX).pow(3),
                     -ScalarFn::sin(kX).pow(3),
                     1.5 * ScalarFn::cos(kX) - 1},
                    Signature::E31};
  ex.default_interval = {-1.0, 1.0};
  return ex;
}

// The companion curve of f5: alpha5 with first and second components
// swapped. Its representation data comes from the inverse map, anchored
// inside an interval where beta_2' stays away from zero.
CurveExample alpha5_tilde(const Params& params) {
  reject_unknown(params, {});
  CurveExample ex;
  ex.name = "alpha5_tilde";
  ex.signature = Signature::E31;
  ex.closed_form = {{ScalarFn::sin(kX).pow(3),
                     -1 + 1.5 * ScalarFn::cos(kX) - ScalarFn::cos(kX).pow(3),
                     1.5 * ScalarFn::cos(kX) - 1},
                    Signature::E31};
  ex.default_interval = {0.2, 0.7};
  InverseE31 inv = inverse_e31(ex.closed_form, ScalarFn::constant(1));
  ex.data31 = assemble_e31(inv, ex.closed_form, 0.45);
  return ex;
}

}  // namespace

TranslationSurface SurfaceExample::closed_form_surface() const {
  return make_surface(make_evaluator(c1.closed_form), make_evaluator(c2.closed_form));
}

TranslationSurface SurfaceExample::representation_surface(double quad_tol) const {
  if (!c1.data31 || !c2.data31)
    throw ConfigError("surface example lacks representation data");
  return make_surface(make_evaluator(*c1.data31, quad_tol),
                      make_evaluator(*c2.data31, quad_tol));
}

std::vector<std::string> list_examples() {
  return {"alpha1", "alpha2", "alpha3", "alpha4", "alpha4_tilde",
          "alpha5", "alpha5_tilde", "f4", "f5"};
}

bool is_surface_example(const std::string& name) {
  return name == "f4" || name == "f5";
}

CurveExample build_curve_example(const std::string& name, const Params& params) {
  if (name == "alpha1") return alpha1(params);
  if (name == "alpha2") return alpha2(params);
  if (name == "alpha3") return alpha3(params, "alpha3");
  if (name == "alpha4") {
    reject_unknown(params, {});
    return alpha3({{"q", 4}, {"r", 2}, {"s", 1}}, "alpha4");
  }
  if (name == "alpha4_tilde") {
    reject_unknown(params, {});
    // Parameters with q-s = 1, s-r = 1, matching the published closed
    // form of the companion curve of f4.
    return alpha3({{"q", 2}, {"r", 0}, {"s", 1}}, "alpha4_tilde");
  }
  if (name == "alpha5") return alpha5(params);
  if (name == "alpha5_tilde") return alpha5_tilde(params);
  throw ConfigError("unknown curve example '" + name + "'");
}

SurfaceExample build_surface_example(const std::string& name) {
  if (name == "f4")
    return {"f4", build_curve_example("alpha4"), build_curve_example("alpha4_tilde")};
  if (name == "f5")
    return {"f5", build_curve_example("alpha5"), build_curve_example("alpha5_tilde")};
  throw ConfigError("unknown surface example '" + name + "'");
}

std::string describe_example(const std::string& name) {
  if (name == "alpha1") return "exponential null curve in E42; params p,q,r,s (r != s)";
  if (name == "alpha2") return "trigonometric null curve in E42; params p,q (q != 0)";
  if (name == "alpha3") return "exponential null curve in E31; params q,r,s (r != s, q+s-2r != 0)";
  if (name == "alpha4") return "alpha3 with q=4, r=2, s=1";
  if (name == "alpha4_tilde") return "companion curve of f4 (alpha3 family, q-s=1, s-r=1)";
  if (name == "alpha5") return "trigonometric null curve in E31";
  if (name == "alpha5_tilde") return "alpha5 with first two components swapped";
  if (name == "f4") return "minimal timelike surface alpha4 + alpha4_tilde";
  if (name == "f5") return "minimal timelike surface alpha5 + alpha5_tilde";
  throw ConfigError("unknown example '" + name + "'");
}

}  // namespace nullforge
