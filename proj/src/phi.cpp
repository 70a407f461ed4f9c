#include "nullforge/phi.hpp"

#include "nullforge/errors.hpp"

namespace nullforge {

namespace {

Jet jet_of(const ScalarFn& f, double xi) {
  ScalarFn d1 = f.derivative();
  ScalarFn d2 = d1.derivative();
  return {f(xi), d1(xi), d2(xi)};
}

double entry(const Jet& j, int order) {
  switch (order) {
    case 0: return j.f;
    case 1: return j.df;
    case 2: return j.d2f;
  }
  throw Error("derivative order out of range");
}

// det of (row at order oa; row at order ob)
double det_orders(const RowJet& r, const RowJet& s, int oa, int ob) {
  return det2(entry(r.c1, oa), entry(r.c2, oa), entry(s.c1, ob), entry(s.c2, ob));
}

}  // namespace

RowJet Row2::jet(double xi) const { return {jet_of(c1, xi), jet_of(c2, xi)}; }

Row2 Row2::transformed(RowOp op) const {
  if (op == RowOp::E) return {c1, -c2};
  return {c2, c1};
}

double phi_n(const RowJet& x, const RowJet& y, int n) {
  if (n != 0 && n != 1) throw Error("phi_n: n must be 0 or 1");
  return -det_orders(x, y, 0, n + 1) + det_orders(x, y, n + 1, 0);
}

double wronskian(const RowJet& p, int order) {
  if (order != 1 && order != 2) throw Error("wronskian: order must be 1 or 2");
  return det_orders(p, p, 0, order);
}

double phi_n(const Row2& x, const Row2& y, int n, double xi) {
  return phi_n(x.jet(xi), y.jet(xi), n);
}

double wronskian(const Row2& p, int order, double xi) {
  return wronskian(p.jet(xi), order);
}

ScalarFn phi_symbolic(const Row2& x, const Row2& y) {
  ScalarFn x1 = x.c1, x2 = x.c2, y1 = y.c1, y2 = y.c2;
  ScalarFn dx1 = x1.derivative(), dx2 = x2.derivative();
  ScalarFn dy1 = y1.derivative(), dy2 = y2.derivative();
  return -(x1 * dy2 - x2 * dy1) + (dx1 * y2 - dx2 * y1);
}

ScalarFn wronskian_symbolic(const Row2& p) {
  return p.c1 * p.c2.derivative() - p.c2 * p.c1.derivative();
}

}  // namespace nullforge
