#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nullforge/surfaces.hpp"

namespace nullforge {

using Params = std::map<std::string, double>;

/// One named curve construction: its generating representation data plus
/// the closed-form parametrization it must reproduce (the golden pair).
struct CurveExample {
  std::string name;
  Signature signature = Signature::E42;
  std::optional<ReprData42> data42;
  std::optional<ReprData31> data31;
  CurveFn closed_form;
  std::optional<ScalarFn> p11_closed_form;  // analytic P11, where known
  std::pair<double, double> default_interval{-1.0, 1.0};
};

/// A named minimal timelike surface built from two catalog curves.
struct SurfaceExample {
  std::string name;
  CurveExample c1, c2;

  /// Surface over the closed-form generators.
  TranslationSurface closed_form_surface() const;
  /// Surface over the representation-data generators (quadrature path).
  TranslationSurface representation_surface(double quad_tol = 1e-10) const;
};

/// Names: alpha1, alpha2, alpha3, alpha4, alpha4_tilde, alpha5,
/// alpha5_tilde (curves) and f4, f5 (surfaces).
std::vector<std::string> list_examples();
bool is_surface_example(const std::string& name);

/// Build a curve example. Unknown parameters are rejected; missing ones
/// take the defaults listed by describe_example. Throws ConstraintError
/// when a parameter constraint (r != s, q != 0, q+s-2r != 0) fails.
CurveExample build_curve_example(const std::string& name, const Params& params = {});

SurfaceExample build_surface_example(const std::string& name);

std::string describe_example(const std::string& name);

}  // namespace nullforge
