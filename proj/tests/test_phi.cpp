#include <doctest.h>

#include <cmath>
#include <random>

#include "generators.hpp"
#include "nullforge/phi.hpp"

using namespace nullforge;
using nullforge::testing::random_row;

namespace {
const ScalarFn X = ScalarFn::variable();
}

TEST_CASE("row signature transforms") {
  Row2 r{X, ScalarFn::constant(1)};
  Row2 re = r.transformed(RowOp::E);
  CHECK(re.c1(2.0) == doctest::Approx(2.0));
  CHECK(re.c2(2.0) == doctest::Approx(-1.0));
  Row2 rl = r.transformed(RowOp::L);
  CHECK(rl.c1(2.0) == doctest::Approx(1.0));
  CHECK(rl.c2(2.0) == doctest::Approx(2.0));

  // E is an involution
  Row2 ree = re.transformed(RowOp::E);
  for (int i = 0; i < 10; ++i) {
    double xi = -1.0 + 0.2 * i;
    CHECK(ree.c1(xi) == doctest::Approx(r.c1(xi)));
    CHECK(ree.c2(xi) == doctest::Approx(r.c2(xi)));
  }
}

TEST_CASE("phi_n hand-computed values") {
  Row2 x{X.pow(2), ScalarFn::constant(1)};
  Row2 y{ScalarFn::constant(1), X};
  CHECK(phi_n(x, y, 0, 2.0) == doctest::Approx(4.0));
  CHECK(phi_n(x, y, 1, 2.0) == doctest::Approx(4.0));

  // finite difference of the n=0 value
  double h = 1e-5;
  double fd = (phi_n(x, y, 0, 2.0 + h) - phi_n(x, y, 0, 2.0 - h)) / (2 * h);
  CHECK(phi_n(x, y, 1, 2.0) == doctest::Approx(fd).epsilon(1e-6));

  Row2 cx{ScalarFn::constant(3), ScalarFn::constant(-2)};
  Row2 cy{ScalarFn::constant(1), ScalarFn::constant(5)};
  CHECK(phi_n(cx, cy, 0, 0.7) == doctest::Approx(0.0));
  CHECK(phi_n(cx, cy, 1, 0.7) == doctest::Approx(0.0));
}

TEST_CASE("wronskian values") {
  Row2 p{ScalarFn::exp(X), ScalarFn::constant(1)};
  CHECK(wronskian(p, 1, 0.0) == doctest::Approx(-1.0));

  // (e^{r xi}, e^{s xi}) has Wronskian (s-r) e^{(r+s) xi}
  double r = 1.3, s = -0.4;
  Row2 q{ScalarFn::exp(r * X), ScalarFn::exp(s * X)};
  for (double xi : {-0.5, 0.0, 0.8})
    CHECK(wronskian(q, 1, xi) ==
          doctest::Approx((s - r) * std::exp((r + s) * xi)).epsilon(1e-12));

  Row2 c{ScalarFn::constant(2), ScalarFn::constant(-1)};
  CHECK(wronskian(c, 1, 0.3) == doctest::Approx(0.0));
  CHECK(wronskian(c, 2, 0.3) == doctest::Approx(0.0));
}

TEST_CASE("phi symmetry, scaling, derivative consistency") {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> pt(-1.0, 1.0);
  ScalarFn k = 2 + ScalarFn::sin(X);
  for (int i = 0; i < 30; ++i) {
    Row2 x = random_row(rng), y = random_row(rng);
    double xi = pt(rng);

    double pxy = phi_n(x, y, 0, xi);
    double pyx = phi_n(y, x, 0, xi);
    CHECK(std::abs(pxy - pyx) <= 1e-10 * std::max(1.0, std::abs(pxy)));

    Row2 kx{k * x.c1, k * x.c2}, ky{k * y.c1, k * y.c2};
    double scaled = phi_n(kx, ky, 0, xi);
    double expected = k(xi) * k(xi) * pxy;
    CHECK(std::abs(scaled - expected) <= 1e-9 * std::max(1.0, std::abs(expected)));

    double h = 1e-5;
    double fd = (phi_n(x, y, 0, xi + h) - phi_n(x, y, 0, xi - h)) / (2 * h);
    CHECK(phi_n(x, y, 1, xi) == doctest::Approx(fd).epsilon(1e-6));
  }
}

TEST_CASE("symbolic phi and wronskian match the jet path") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> pt(-1.0, 1.0);
  for (int i = 0; i < 10; ++i) {
    Row2 x = random_row(rng), y = random_row(rng);
    double xi = pt(rng);
    CHECK(phi_symbolic(x, y)(xi) == doctest::Approx(phi_n(x, y, 0, xi)).epsilon(1e-12));
    CHECK(wronskian_symbolic(y)(xi) == doctest::Approx(wronskian(y, 1, xi)).epsilon(1e-12));
  }
}
