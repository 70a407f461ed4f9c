#pragma once

#include "nullforge/expr.hpp"

namespace nullforge {

/// Value and first two derivatives of a scalar function at one point.
struct Jet {
  double f = 0, df = 0, d2f = 0;
};

/// Pointwise data of a 1x2 function-valued row: value, first and second
/// derivative of both entries.
struct RowJet {
  Jet c1, c2;
};

/// The two constant matrices a row may be right-multiplied by:
/// E = diag(1,-1), L = antidiag(1,1).
enum class RowOp { E, L };

/// A 1x2 row of scalar functions. Differentiable to order 2 by
/// construction.
struct Row2 {
  ScalarFn c1, c2;

  RowJet jet(double xi) const;

  /// Right multiplication: rE = (c1, -c2), rL = (c2, c1).
  Row2 transformed(RowOp op) const;
};

inline RowJet apply(const RowJet& r, RowOp op) {
  if (op == RowOp::E) return {r.c1, {-r.c2.f, -r.c2.df, -r.c2.d2f}};
  return {r.c2, r.c1};
}

inline double det2(double a1, double a2, double b1, double b2) {
  return a1 * b2 - a2 * b1;
}

/// phi_n(x, y) = -det(x; y^(n+1)) + det(x^(n+1); y), n in {0, 1}.
/// n = 0 is the phi of the representation formula; n = 1 is its
/// derivative, computed by its own determinant formula.
double phi_n(const RowJet& x, const RowJet& y, int n);

/// det of the row stacked with its derivative of the given order:
/// det(p; p^(order)), order in {1, 2}.
double wronskian(const RowJet& p, int order);

double phi_n(const Row2& x, const Row2& y, int n, double xi);
double wronskian(const Row2& p, int order, double xi);

/// Symbolic counterparts, used to build curves whose components are
/// themselves ScalarFn expressions.
ScalarFn phi_symbolic(const Row2& x, const Row2& y);
ScalarFn wronskian_symbolic(const Row2& p);

}  // namespace nullforge
