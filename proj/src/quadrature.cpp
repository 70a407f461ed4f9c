#include "nullforge/quadrature.hpp"

#include <cmath>

namespace nullforge {

namespace {

constexpr int kMaxDepth = 40;

struct Ctx {
  const std::function<double(double)>& f;
  long evaluations = 0;
  double error_estimate = 0;

  double eval(double x) {
    ++evaluations;
    double v = f(x);
    if (!std::isfinite(v))
      throw QuadratureError("integrand is not finite at x=" + std::to_string(x));
    return v;
  }

  // whole = Simpson on [a,b]; recurse until the Richardson estimate
  // |S_left + S_right - S_whole| / 15 meets the local tolerance budget.
  double simpson(double a, double b, double fa, double fm, double fb,
                 double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = eval(lm), frm = eval(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol || depth >= kMaxDepth) {
      if (depth >= kMaxDepth && std::abs(delta) > 15.0 * tol)
        throw QuadratureError(
            "max subdivision depth exceeded; suspected singularity or "
            "tolerance too tight");
      error_estimate += std::abs(delta) / 15.0;
      return left + right + delta / 15.0;
    }
    return simpson(a, m, fa, flm, fm, left, tol / 2, depth + 1) +
           simpson(m, b, fm, frm, fb, right, tol / 2, depth + 1);
  }
};

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a,
                              double b, double tol) {
  if (!(tol > 0)) throw QuadratureError("tolerance must be positive");
  if (a == b) return {0.0, 0.0, 0};
  if (a > b) {
    QuadResult r = integrate_adaptive(f, b, a, tol);
    r.value = -r.value;
    return r;
  }
  Ctx ctx{f};
  double m = 0.5 * (a + b);
  double fa = ctx.eval(a), fm = ctx.eval(m), fb = ctx.eval(b);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  double value = ctx.simpson(a, b, fa, fm, fb, whole, tol, 0);
  return {value, ctx.error_estimate, ctx.evaluations};
}

}  // namespace nullforge
