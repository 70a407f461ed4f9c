#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "nullforge/errors.hpp"

namespace nullforge {

/// Metric signature tag. E42 is (+,+,-,-) on R^4, E31 is (+,+,-) on R^3.
enum class Signature { E42, E31 };

inline int dimension(Signature sig) { return sig == Signature::E42 ? 4 : 3; }

/// A point or vector in E^4_2 or E^3_1.
struct PEVector {
  Signature signature = Signature::E42;
  std::array<double, 4> coords{};  // last entry unused for E31

  int dim() const { return dimension(signature); }

  double& operator[](std::size_t i) { return coords[i]; }
  double operator[](std::size_t i) const { return coords[i]; }

  static PEVector e42(double c1, double c2, double c3, double c4) {
    return {Signature::E42, {c1, c2, c3, c4}};
  }
  static PEVector e31(double c1, double c2, double c3) {
    return {Signature::E31, {c1, c2, c3, 0.0}};
  }

  friend PEVector operator+(const PEVector& u, const PEVector& v) {
    if (u.signature != v.signature)
      throw SignatureMismatchError("cannot add vectors of different signatures");
    PEVector r = u;
    for (int i = 0; i < u.dim(); ++i) r.coords[i] += v.coords[i];
    return r;
  }
  friend PEVector operator-(const PEVector& u, const PEVector& v) {
    if (u.signature != v.signature)
      throw SignatureMismatchError("cannot subtract vectors of different signatures");
    PEVector r = u;
    for (int i = 0; i < u.dim(); ++i) r.coords[i] -= v.coords[i];
    return r;
  }
  friend PEVector operator*(double a, const PEVector& v) {
    PEVector r = v;
    for (int i = 0; i < v.dim(); ++i) r.coords[i] *= a;
    return r;
  }

  /// Euclidean square-sum, the positive-definite surrogate used for
  /// tolerance scaling.
  double euclidean_sq() const {
    double s = 0;
    for (int i = 0; i < dim(); ++i) s += coords[i] * coords[i];
    return s;
  }
};

/// Indefinite inner product: sum eps_i u_i v_i with
/// eps = (1,1,-1,-1) for E42 and (1,1,-1) for E31.
inline double inner_product(const PEVector& u, const PEVector& v) {
  if (u.signature != v.signature)
    throw SignatureMismatchError("inner product requires matching signatures");
  if (u.signature == Signature::E42)
    return u[0] * v[0] + u[1] * v[1] - u[2] * v[2] - u[3] * v[3];
  return u[0] * v[0] + u[1] * v[1] - u[2] * v[2];
}

/// Null test with the Euclidean square-sum as scale:
/// |<v,v>| <= tol * max(1, sum v_i^2).
inline bool is_null(const PEVector& v, double tol) {
  return std::abs(inner_product(v, v)) <= tol * std::max(1.0, v.euclidean_sq());
}

}  // namespace nullforge
