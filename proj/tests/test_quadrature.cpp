#include <doctest.h>

#include <cmath>
#include <random>

#include "nullforge/quadrature.hpp"

using namespace nullforge;

TEST_CASE("known integrals") {
  auto lin = [](double x) { return x; };
  CHECK(integrate_adaptive(lin, 0, 1, 1e-10).value == doctest::Approx(0.5).epsilon(1e-12));

  auto ex = [](double x) { return std::exp(x); };
  CHECK(integrate_adaptive(ex, 0, 1, 1e-10).value ==
        doctest::Approx(std::exp(1.0) - 1).epsilon(1e-10));

  auto sn = [](double x) { return std::sin(x); };
  CHECK(integrate_adaptive(sn, 0, M_PI, 1e-10).value == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("additivity and antisymmetry") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> pt(0.1, 0.9);
  auto f = [](double x) { return std::exp(-x) * std::cos(3 * x); };
  double whole = integrate_adaptive(f, 0, 1, 1e-10).value;
  for (int i = 0; i < 10; ++i) {
    double m = pt(rng);
    double split = integrate_adaptive(f, 0, m, 1e-10).value +
                   integrate_adaptive(f, m, 1, 1e-10).value;
    CHECK(std::abs(split - whole) <= 2e-10);
  }
  CHECK(integrate_adaptive(f, 1, 0, 1e-10).value == doctest::Approx(-whole).epsilon(1e-12));
  CHECK(integrate_adaptive(f, 0.5, 0.5, 1e-10).value == 0.0);
}

TEST_CASE("error reporting") {
  auto sing = [](double x) { return 1.0 / std::abs(x - 1.0 / 3.0); };
  CHECK_THROWS_AS(integrate_adaptive(sing, 0, 1, 1e-10), QuadratureError);

  auto nan_at_zero = [](double x) { return std::sin(1.0 / x); };
  CHECK_THROWS_AS(integrate_adaptive(nan_at_zero, 0, 1, 1e-10), QuadratureError);

  auto ok = [](double x) { return x; };
  CHECK_THROWS_AS(integrate_adaptive(ok, 0, 1, -1.0), QuadratureError);
}

TEST_CASE("error estimate is honest for smooth integrands") {
  auto f = [](double x) { return std::cos(10 * x); };
  QuadResult r = integrate_adaptive(f, 0, 2, 1e-10);
  CHECK(std::abs(r.value - std::sin(20.0) / 10.0) <= 1e-9);
  CHECK(r.evaluations > 0);
}
