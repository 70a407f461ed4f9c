#pragma once

#include <functional>
#include <vector>

#include "nullforge/null_repr.hpp"

namespace nullforge {

/// Position + derivative evaluators of a single curve, detached from any
/// particular representation (symbolic closed form, E42 data, or
/// quadrature-backed E31 data).
struct CurveEvaluator {
  Signature signature = Signature::E42;
  std::function<PEVector(double)> position;
  std::function<PEVector(double)> derivative;
};

CurveEvaluator make_evaluator(const CurveFn& c);
CurveEvaluator make_evaluator(const ReprData42& d);
CurveEvaluator make_evaluator(const ReprData31& d, double quad_tol = 1e-10);

/// Translation surface f(xi1, xi2) = gamma1(xi1) + gamma2(xi2) of two
/// null curves. The mixed second derivative vanishes structurally.
struct TranslationSurface {
  CurveEvaluator gamma1, gamma2;

  Signature signature() const { return gamma1.signature; }
  PEVector eval(double xi1, double xi2) const;
};

TranslationSurface make_surface(CurveEvaluator gamma1, CurveEvaluator gamma2);

/// Uniform rectangular sample grid over [a1,b1] x [a2,b2].
struct GridSpec {
  double a1 = -1, b1 = 1, a2 = -1, b2 = 1;
  int n1 = 21, n2 = 21;

  double xi1(int i) const { return n1 > 1 ? a1 + (b1 - a1) * i / (n1 - 1) : a1; }
  double xi2(int j) const { return n2 > 1 ? a2 + (b2 - a2) * j / (n2 - 1) : a2; }
};

/// Result of checking the null-coordinate minimality conditions
/// <f_1,f_1> = <f_2,f_2> = 0 over a grid (f_12 = 0 holds structurally
/// for a translation surface and is recorded as such).
struct MinimalityReport {
  double max_residual = 0;        // worst scaled |<f_i, f_i>| over both directions
  double worst_xi1 = 0, worst_xi2 = 0;
  int worst_direction = 1;        // 1 or 2
  bool mixed_term_structural = true;
  bool pass = false;
};

MinimalityReport verify_minimality(const TranslationSurface& s,
                                   const GridSpec& grid, double tol);

struct PointFlags {
  bool immersed = false;       // derivative matrix has a robust 2x2 minor
  bool chen_ok = false;        // <gamma1(xi1), gamma2(xi2)> != 0 (positions)
  bool chen_deriv_ok = false;  // <gamma1'(xi1), gamma2'(xi2)> != 0
};

/// Per-point flags in row-major order (xi1 outer, xi2 inner).
std::vector<PointFlags> classify_points(const TranslationSurface& s,
                                        const GridSpec& grid, double tol);

/// Independent finite-difference check of the mean curvature vector
/// magnitude (Euclidean norm of the normal part). Uses only surface
/// positions, never the curve derivative evaluators. Throws Error when
/// the induced metric is degenerate at the point.
double mean_curvature_oracle(const TranslationSurface& s, double xi1,
                             double xi2, double h);

/// Same oracle for an arbitrary parametric surface (used by tests for
/// non-minimal control surfaces).
double mean_curvature_oracle(const std::function<PEVector(double, double)>& f,
                             double xi1, double xi2, double h);

}  // namespace nullforge
