#include "nullforge/null_repr.hpp"

#include <algorithm>
#include <cmath>

#include "nullforge/quadrature.hpp"

namespace nullforge {

namespace {

constexpr double kDegeneracyFactor = 1e-12;

ScalarFn component_or_zero(const CurveFn& c, std::size_t i) {
  if (i < c.components.size()) return c.components[i];
  return ScalarFn::constant(0);
}

}  // namespace

PEVector CurveFn::position(double xi) const {
  PEVector v;
  v.signature = signature;
  for (std::size_t i = 0; i < components.size(); ++i) v[i] = components[i](xi);
  return v;
}

PEVector CurveFn::derivative(double xi) const {
  PEVector v;
  v.signature = signature;
  for (std::size_t i = 0; i < components.size(); ++i)
    v[i] = components[i].derivative()(xi);
  return v;
}

double checked_wronskian(const RowJet& p2, double xi) {
  double w = wronskian(p2, 1);
  double mag = std::max({std::abs(p2.c1.f), std::abs(p2.c2.f),
                         std::abs(p2.c1.df), std::abs(p2.c2.df)});
  double threshold = kDegeneracyFactor * (1.0 + mag) * (1.0 + mag);
  if (std::abs(w) < threshold)
    throw DegenerateWronskianError("det(p2; p2') = " + std::to_string(w) +
                                   " is degenerate at xi=" + std::to_string(xi));
  return w;
}

namespace {

// The four (E, L) row combinations of the representation formula, as
// phi values from precomputed jets.
std::array<double, 4> phi_four(const RowJet& p1, const RowJet& p2, int n) {
  RowJet p1e = apply(p1, RowOp::E);
  RowJet p2l = apply(p2, RowOp::L);
  return {phi_n(p1, p2, n), phi_n(p1e, p2l, n), phi_n(p1e, p2, n),
          phi_n(p1, p2l, n)};
}

PEVector forward_from_jets(const RowJet& p1, const RowJet& p2, double xi) {
  double w = checked_wronskian(p2, xi);
  auto phis = phi_four(p1, p2, 0);
  return PEVector::e42(phis[0] / (4 * w), phis[1] / (4 * w), phis[2] / (4 * w),
                       phis[3] / (4 * w));
}

PEVector derivative_from_jets(const RowJet& p1, const RowJet& p2, double xi) {
  double w = checked_wronskian(p2, xi);
  double w2 = wronskian(p2, 2);
  auto phi0 = phi_four(p1, p2, 0);
  auto phi1 = phi_four(p1, p2, 1);
  PEVector v;
  v.signature = Signature::E42;
  for (int i = 0; i < 4; ++i)
    v[i] = (phi1[i] * w - phi0[i] * w2) / (4 * w * w);
  return v;
}

}  // namespace

PEVector forward_e42(const ReprData42& d, double xi) {
  return forward_from_jets(d.p1.jet(xi), d.p2.jet(xi), xi);
}

CurveFn forward_e42_symbolic(const ReprData42& d) {
  ScalarFn w = wronskian_symbolic(d.p2);
  Row2 p1e = d.p1.transformed(RowOp::E);
  Row2 p2l = d.p2.transformed(RowOp::L);
  ScalarFn denom = 4 * w;
  CurveFn c;
  c.signature = Signature::E42;
  c.components = {phi_symbolic(d.p1, d.p2) / denom,
                  phi_symbolic(p1e, p2l) / denom,
                  phi_symbolic(p1e, d.p2) / denom,
                  phi_symbolic(d.p1, p2l) / denom};
  return c;
}

PEVector curve_derivative_e42(const ReprData42& d, double xi) {
  return derivative_from_jets(d.p1.jet(xi), d.p2.jet(xi), xi);
}

ReprData42 inverse_e42(const CurveFn& beta, const ScalarFn& k, InverseMode mode) {
  // The third component enters the inverse with opposite orientation:
  // recovering from (b1, b2, -b3, b4) makes forward_e42 reproduce beta
  // itself (expanding phi(p1 E, p2) of the recovered rows yields the
  // negated third component otherwise).
  ScalarFn b1 = component_or_zero(beta, 0), b2 = component_or_zero(beta, 1),
           b3 = -component_or_zero(beta, 2), b4 = component_or_zero(beta, 3);
  ScalarFn db1 = b1.derivative(), db2 = b2.derivative(), db3 = b3.derivative(),
           db4 = b4.derivative();
  if (mode == InverseMode::Standard) {
    ScalarFn P11 = -2 * ((b1 - b3) * (db2 + db4) - (b2 + b4) * (db1 - db3)) * k;
    ScalarFn P12 = -2 * ((b2 - b4) * (db2 + db4) + (b1 + b3) * (db1 - db3)) * k;
    ScalarFn P21 = (db2 + db4) * k;
    ScalarFn P22 = (db1 - db3) * k;
    return {{P11, P12}, {P21, P22}};
  }
  // Alternative factorization of the defining relation, valid by the
  // null-curve equation; P11 and P12 are rebuilt from the alternative
  // p2 row so the recovery relations keep holding.
  ScalarFn P21 = -(db1 + db3) * k;
  ScalarFn P22 = (db2 - db4) * k;
  ScalarFn P11 = -2 * (-(b1 - b3) * (db1 + db3) - (b2 + b4) * (db2 - db4)) * k;
  ScalarFn P12 = -2 * (-(b2 - b4) * (db1 + db3) + (b1 + b3) * (db2 - db4)) * k;
  return {{P11, P12}, {P21, P22}};
}

std::array<double, 4> inverse_e42_values(const CurveFn& beta, const ScalarFn& k,
                                         InverseMode mode, double xi) {
  ReprData42 d = inverse_e42(beta, k, mode);
  return {d.p1.c1(xi), d.p1.c2(xi), d.p2.c1(xi), d.p2.c2(xi)};
}

namespace {

struct E31Jets {
  RowJet p1, p2;
};

// Builds the jets of p1 = (P11, P12) and p2 = (P21, P22) at xi, with
// P11 = P21 * (integral + C) and its derivatives taken from the defining
// ODE rather than differencing the quadrature.
E31Jets e31_jets(const ReprData31& d, double xi, double quad_tol) {
  ScalarFn dP12 = d.P12.derivative(), d2P12 = dP12.derivative();
  ScalarFn dP21 = d.P21.derivative(), d2P21 = dP21.derivative();
  ScalarFn dP22 = d.P22.derivative(), d2P22 = dP22.derivative();

  double lo = std::min(d.xi0, xi), hi = std::max(d.xi0, xi);
  // P21 must not cross zero inside the integration interval.
  double p21_at_lo = d.P21(lo);
  for (int i = 0; i <= 64; ++i) {
    double t = lo + (hi - lo) * i / 64.0;
    double v = d.P21(t);
    if (std::abs(v) < 1e-14 * (1.0 + std::abs(d.P22(t))) || v * p21_at_lo < 0)
      throw QuadratureError("P21 has a zero in the integration interval at xi=" +
                            std::to_string(t));
  }

  auto integrand = [&](double t) {
    double p21 = d.P21(t);
    return (dP12(t) * d.P22(t) - d.P12(t) * dP22(t)) / (p21 * p21);
  };
  double J = integrate_adaptive(integrand, d.xi0, xi, quad_tol).value + d.C;

  double p21 = d.P21(xi), dp21 = dP21(xi), d2p21 = d2P21(xi);
  double p22 = d.P22(xi), dp22 = dP22(xi), d2p22 = d2P22(xi);
  double p12 = d.P12(xi), dp12 = dP12(xi), d2p12 = d2P12(xi);

  double D = dp12 * p22 - p12 * dp22;          // P12' P22 - P12 P22'
  double dD = d2p12 * p22 - p12 * d2p22;       // its derivative
  double A = D / (p21 * p21);                  // the integrand at xi
  double dA = dD / (p21 * p21) - 2 * D * dp21 / (p21 * p21 * p21);

  Jet P11{p21 * J, dp21 * J + D / p21, d2p21 * J + 2 * dp21 * A + p21 * dA};
  E31Jets jets;
  jets.p1 = {P11, {p12, dp12, d2p12}};
  jets.p2 = {{p21, dp21, d2p21}, {p22, dp22, d2p22}};
  return jets;
}

}  // namespace

PEVector forward_e31(const ReprData31& d, double xi, double quad_tol) {
  PEVector full = forward_e31_embedded(d, xi, quad_tol);
  return PEVector::e31(full[0], full[1], full[2]);
}

PEVector forward_e31_embedded(const ReprData31& d, double xi, double quad_tol) {
  E31Jets jets = e31_jets(d, xi, quad_tol);
  return forward_from_jets(jets.p1, jets.p2, xi);
}

double forward_e31_p11(const ReprData31& d, double xi, double quad_tol) {
  return e31_jets(d, xi, quad_tol).p1.c1.f;
}

PEVector curve_derivative_e31(const ReprData31& d, double xi, double quad_tol) {
  E31Jets jets = e31_jets(d, xi, quad_tol);
  PEVector full = derivative_from_jets(jets.p1, jets.p2, xi);
  return PEVector::e31(full[0], full[1], full[2]);
}

InverseE31 inverse_e31(const CurveFn& beta, const ScalarFn& k) {
  // Same orientation flip of the third component as in inverse_e42.
  ScalarFn b1 = component_or_zero(beta, 0), b2 = component_or_zero(beta, 1),
           b3 = -component_or_zero(beta, 2);
  ScalarFn db1 = b1.derivative(), db2 = b2.derivative(), db3 = b3.derivative();
  ScalarFn P12 = -2 * (b2 * db2 + (b1 + b3) * (db1 - db3)) * k;
  ScalarFn P21 = db2 * k;
  ScalarFn P22 = (db1 - db3) * k;
  return {P12, P21, P22};
}

ReprData31 assemble_e31(const InverseE31& inv, const CurveFn& beta, double xi0) {
  // At xi0 the integral vanishes, so C is fixed by matching beta_1 there:
  // 4 beta_1 W = -C W + (P12 P21' - P12' P21) + D P22 / P21,
  // with W = P21 P22' - P21' P22 and D = P12' P22 - P12 P22'.
  ScalarFn dP12 = inv.P12.derivative(), dP21 = inv.P21.derivative(),
           dP22 = inv.P22.derivative();
  double p12 = inv.P12(xi0), dp12 = dP12(xi0);
  double p21 = inv.P21(xi0), dp21 = dP21(xi0);
  double p22 = inv.P22(xi0), dp22 = dP22(xi0);
  if (std::abs(p21) < 1e-14 * (1.0 + std::abs(p22)))
    throw DegenerateWronskianError(
        "P21 vanishes at the anchor point; beta_2 must be non-constant there");
  double w = p21 * dp22 - dp21 * p22;
  double mag = std::max({std::abs(p21), std::abs(p22), std::abs(dp21), std::abs(dp22)});
  if (std::abs(w) < kDegeneracyFactor * (1.0 + mag) * (1.0 + mag))
    throw DegenerateWronskianError("det(p2; p2') degenerate at the anchor point");
  double D = dp12 * p22 - p12 * dp22;
  double B = (p12 * dp21 - dp12 * p21) + D * p22 / p21;
  double beta1 = beta.components.at(0)(xi0);
  double C = (B - 4 * beta1 * w) / w;
  return {inv.P12, inv.P21, inv.P22, xi0, C};
}

LemmaResiduals lemma_residuals_detailed(const Row2& x, const Row2& y, int n,
                                        double xi) {
  RowJet xj = x.jet(xi), yj = y.jet(xi);
  RowJet xe = apply(xj, RowOp::E), yl = apply(yj, RowOp::L);

  auto sq = [](double v) { return v * v; };
  double t1 = sq(phi_n(xj, yj, n)), t2 = sq(phi_n(xe, yl, n));
  double t3 = sq(phi_n(xe, yj, n)), t4 = sq(phi_n(xj, yl, n));
  double rhs1 = 4 * wronskian(xj, n + 1) * wronskian(yj, n + 1);

  double u1 = phi_n(xj, yj, 1) * phi_n(xj, yj, 0);
  double u2 = phi_n(xe, yl, 1) * phi_n(xe, yl, 0);
  double u3 = phi_n(xe, yj, 1) * phi_n(xe, yj, 0);
  double u4 = phi_n(xj, yl, 1) * phi_n(xj, yl, 0);
  double rhs2 = 2 * wronskian(xj, 2) * wronskian(yj, 1) +
                2 * wronskian(xj, 1) * wronskian(yj, 2);

  LemmaResiduals r;
  r.res1 = (t1 + t2 - t3 - t4) - rhs1;
  r.res2 = (u1 + u2 - u3 - u4) - rhs2;
  r.scale1 = std::max(1.0, t1 + t2 + t3 + t4 + std::abs(rhs1));
  r.scale2 = std::max(1.0, std::abs(u1) + std::abs(u2) + std::abs(u3) +
                               std::abs(u4) + std::abs(rhs2));
  return r;
}

std::pair<double, double> lemma_residuals(const Row2& x, const Row2& y, int n,
                                          double xi) {
  LemmaResiduals r = lemma_residuals_detailed(x, y, n, xi);
  return {r.res1, r.res2};
}

}  // namespace nullforge
