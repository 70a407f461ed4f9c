#pragma once

#include <utility>
#include <vector>

#include "nullforge/phi.hpp"
#include "nullforge/pseudo_euclid.hpp"

namespace nullforge {

/// Generating data of a null curve in E^4_2: two function-valued rows
/// p1 = (P11, P12), p2 = (P21, P22). The data is admissible at xi when
/// det(p2; p2') is away from zero there.
struct ReprData42 {
  Row2 p1, p2;
};

/// Generating data of a null curve in E^3_1: three scalar functions with
/// P21 != 0 and nonvanishing det((P21,P22); (P21,P22)'). P11 is recovered
/// by integrating from xi0 with constant C.
struct ReprData31 {
  ScalarFn P12, P21, P22;
  double xi0 = 0;
  double C = 0;
};

/// A curve with symbolic components, 4 in E42 or 3 in E31.
struct CurveFn {
  std::vector<ScalarFn> components;
  Signature signature = Signature::E42;

  PEVector position(double xi) const;
  PEVector derivative(double xi) const;
};

enum class InverseMode { Standard, Alternative };

/// The null curve of the four-function representation formula:
/// components phi(p1,p2), phi(p1 E, p2 L), phi(p1 E, p2), phi(p1, p2 L),
/// each divided by 4 det(p2; p2').
PEVector forward_e42(const ReprData42& d, double xi);

/// The same curve with every component a ScalarFn (for feeding the
/// inverse map or differentiating symbolically).
CurveFn forward_e42_symbolic(const ReprData42& d);

/// Closed-form derivative of forward_e42:
/// beta_i' = [phi_1 * det(p2;p2') - phi * det(p2;p2'')] / (4 det(p2;p2')^2)
/// per component. The output is a null vector.
PEVector curve_derivative_e42(const ReprData42& d, double xi);

/// Recover generating data from a null curve beta and a nonvanishing
/// gauge function k. Standard mode is the theorem's inverse formulas;
/// Alternative mode is the variant obtained from the null-curve equation.
ReprData42 inverse_e42(const CurveFn& beta, const ScalarFn& k, InverseMode mode);

/// Pointwise values (P11, P12, P21, P22) of the inverse map at xi.
std::array<double, 4> inverse_e42_values(const CurveFn& beta, const ScalarFn& k,
                                         InverseMode mode, double xi);

/// The 3D specialization: P11 is built by adaptive quadrature of
/// (P12' P22 - P12 P22') / P21^2 from xi0, plus C, scaled by P21. Returns
/// the first three components; the implicit fourth vanishes.
PEVector forward_e31(const ReprData31& d, double xi, double quad_tol = 1e-10);

/// All four components of the assembled data (E42 signature), for
/// checking that the fourth one vanishes.
PEVector forward_e31_embedded(const ReprData31& d, double xi,
                              double quad_tol = 1e-10);

/// The computed P11 at xi (value of the integral-based formula).
double forward_e31_p11(const ReprData31& d, double xi, double quad_tol = 1e-10);

/// Closed-form derivative of forward_e31 (same determinant formula as
/// the E42 case, on the quadrature-backed p1 data).
PEVector curve_derivative_e31(const ReprData31& d, double xi,
                              double quad_tol = 1e-10);

/// Inverse of the 3D representation: (P12, P21, P22) from a null curve in
/// E^3_1 with non-constant second component and a nonvanishing k.
struct InverseE31 {
  ScalarFn P12, P21, P22;
};
InverseE31 inverse_e31(const CurveFn& beta, const ScalarFn& k);

/// Assemble full ReprData31 from an inverse result, fixing the
/// integration constant C so that the reproduced curve matches beta's
/// first component at the anchor point xi0.
ReprData31 assemble_e31(const InverseE31& inv, const CurveFn& beta, double xi0);

/// Residuals of the two phi identities: res1 is LHS - RHS of the squared
/// identity at order n, res2 is LHS - RHS of the mixed phi_1/phi identity
/// (n ignored for res2). Both vanish for all rows.
std::pair<double, double> lemma_residuals(const Row2& x, const Row2& y, int n,
                                          double xi);

/// Residuals together with the local magnitude scales (max(1, sum of the
/// absolute values of the contributing terms)) for relative thresholds.
struct LemmaResiduals {
  double res1 = 0, res2 = 0;
  double scale1 = 1, scale2 = 1;
};
LemmaResiduals lemma_residuals_detailed(const Row2& x, const Row2& y, int n,
                                        double xi);

/// Degeneracy guard used by the forward maps:
/// |det(p2;p2')| < 1e-12 * (1 + max row magnitude)^2 is an error.
double checked_wronskian(const RowJet& p2, double xi);

}  // namespace nullforge
