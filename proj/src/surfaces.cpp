#include "nullforge/surfaces.hpp"

#include <cmath>

namespace nullforge {

CurveEvaluator make_evaluator(const CurveFn& c) {
  return {c.signature, [c](double xi) { return c.position(xi); },
          [c](double xi) { return c.derivative(xi); }};
}

CurveEvaluator make_evaluator(const ReprData42& d) {
  return {Signature::E42, [d](double xi) { return forward_e42(d, xi); },
          [d](double xi) { return curve_derivative_e42(d, xi); }};
}

CurveEvaluator make_evaluator(const ReprData31& d, double quad_tol) {
  return {Signature::E31,
          [d, quad_tol](double xi) { return forward_e31(d, xi, quad_tol); },
          [d, quad_tol](double xi) { return curve_derivative_e31(d, xi, quad_tol); }};
}

PEVector TranslationSurface::eval(double xi1, double xi2) const {
  return gamma1.position(xi1) + gamma2.position(xi2);
}

TranslationSurface make_surface(CurveEvaluator g1, CurveEvaluator g2) {
  if (g1.signature != g2.signature)
    throw SignatureMismatchError("surface generators must share a signature");
  return {std::move(g1), std::move(g2)};
}

MinimalityReport verify_minimality(const TranslationSurface& s,
                                   const GridSpec& grid, double tol) {
  MinimalityReport rep;
  for (int i = 0; i < grid.n1; ++i) {
    for (int j = 0; j < grid.n2; ++j) {
      double x1 = grid.xi1(i), x2 = grid.xi2(j);
      PEVector t1 = s.gamma1.derivative(x1);
      PEVector t2 = s.gamma2.derivative(x2);
      double r1 = std::abs(inner_product(t1, t1)) / std::max(1.0, t1.euclidean_sq());
      double r2 = std::abs(inner_product(t2, t2)) / std::max(1.0, t2.euclidean_sq());
      if (r1 > rep.max_residual) {
        rep.max_residual = r1;
        rep.worst_xi1 = x1;
        rep.worst_xi2 = x2;
        rep.worst_direction = 1;
      }
      if (r2 > rep.max_residual) {
        rep.max_residual = r2;
        rep.worst_xi1 = x1;
        rep.worst_xi2 = x2;
        rep.worst_direction = 2;
      }
    }
  }
  rep.pass = rep.max_residual <= tol;
  return rep;
}

std::vector<PointFlags> classify_points(const TranslationSurface& s,
                                        const GridSpec& grid, double tol) {
  std::vector<PointFlags> flags;
  flags.reserve(static_cast<std::size_t>(grid.n1) * grid.n2);
  int dim = dimension(s.signature());
  for (int i = 0; i < grid.n1; ++i) {
    for (int j = 0; j < grid.n2; ++j) {
      double x1 = grid.xi1(i), x2 = grid.xi2(j);
      PEVector t1 = s.gamma1.derivative(x1);
      PEVector t2 = s.gamma2.derivative(x2);
      PEVector g1 = s.gamma1.position(x1);
      PEVector g2 = s.gamma2.position(x2);

      double max_minor = 0;
      for (int a = 0; a < dim; ++a)
        for (int b = a + 1; b < dim; ++b)
          max_minor = std::max(max_minor,
                               std::abs(t1[a] * t2[b] - t1[b] * t2[a]));
      double scale_t = std::sqrt(std::max(1.0, t1.euclidean_sq())) *
                       std::sqrt(std::max(1.0, t2.euclidean_sq()));
      double scale_p = std::sqrt(std::max(1.0, g1.euclidean_sq())) *
                       std::sqrt(std::max(1.0, g2.euclidean_sq()));

      PointFlags f;
      f.immersed = max_minor > tol * scale_t;
      f.chen_ok = std::abs(inner_product(g1, g2)) > tol * scale_p;
      f.chen_deriv_ok = std::abs(inner_product(t1, t2)) > tol * scale_t;
      flags.push_back(f);
    }
  }
  return flags;
}

double mean_curvature_oracle(const std::function<PEVector(double, double)>& f,
                             double xi1, double xi2, double h) {
  auto fd1 = [&](int dir) {
    return dir == 1 ? (1.0 / (2 * h)) * (f(xi1 + h, xi2) - f(xi1 - h, xi2))
                    : (1.0 / (2 * h)) * (f(xi1, xi2 + h) - f(xi1, xi2 - h));
  };
  PEVector f0 = f(xi1, xi2);
  PEVector f1 = fd1(1), f2 = fd1(2);
  PEVector f11 = (1.0 / (h * h)) * (f(xi1 + h, xi2) - 2.0 * f0 + f(xi1 - h, xi2));
  PEVector f22 = (1.0 / (h * h)) * (f(xi1, xi2 + h) - 2.0 * f0 + f(xi1, xi2 - h));
  PEVector f12 = (1.0 / (4 * h * h)) *
                 (f(xi1 + h, xi2 + h) - f(xi1 + h, xi2 - h) -
                  f(xi1 - h, xi2 + h) + f(xi1 - h, xi2 - h));

  double g11 = inner_product(f1, f1);
  double g12 = inner_product(f1, f2);
  double g22 = inner_product(f2, f2);
  double det = g11 * g22 - g12 * g12;
  // Inverting the metric amplifies the O(h^2) finite-difference noise by
  // 1/det, so require the determinant to be an honest fraction of the
  // derivative magnitudes before trusting the oracle.
  double cond_scale = f1.euclidean_sq() * f2.euclidean_sq();
  if (std::abs(det) <= 2.5e-2 * cond_scale)
    throw Error("induced metric is degenerate at the requested point");

  // H = (1/2) g^{ij} f_ij, then remove the tangential part via the metric.
  double i11 = g22 / det, i12 = -g12 / det, i22 = g11 / det;
  PEVector H = 0.5 * (i11 * f11 + 2.0 * (i12 * f12) + i22 * f22);
  double h1 = inner_product(H, f1), h2 = inner_product(H, f2);
  double a = (g22 * h1 - g12 * h2) / det;
  double b = (g11 * h2 - g12 * h1) / det;
  PEVector Hp = H - a * f1 - b * f2;
  return std::sqrt(Hp.euclidean_sq());
}

double mean_curvature_oracle(const TranslationSurface& s, double xi1,
                             double xi2, double h) {
  return mean_curvature_oracle(
      [&s](double a, double b) { return s.eval(a, b); }, xi1, xi2, h);
}

}  // namespace nullforge
