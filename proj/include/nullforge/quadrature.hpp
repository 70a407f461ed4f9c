#pragma once

#include <functional>

#include "nullforge/errors.hpp"

namespace nullforge {

struct QuadResult {
  double value = 0;
  double error_estimate = 0;
  long evaluations = 0;
};

/// Adaptive Simpson integration of f over [a, b] with Richardson error
/// estimate. Antisymmetric under endpoint swap. Throws QuadratureError
/// when the maximum subdivision depth (40) is exceeded, which signals a
/// suspected singularity or an unreachable tolerance.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a,
                              double b, double tol = 1e-10);

}  // namespace nullforge
