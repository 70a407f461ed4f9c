#include <doctest.h>

#include <random>

#include "nullforge/pseudo_euclid.hpp"

using namespace nullforge;

TEST_CASE("inner product signature") {
  PEVector e1 = PEVector::e42(1, 0, 0, 0);
  PEVector e3 = PEVector::e42(0, 0, 1, 0);
  CHECK(inner_product(e1, e1) == 1.0);
  CHECK(inner_product(e3, e3) == -1.0);

  PEVector v = PEVector::e42(1, 2, 2, 1);
  CHECK(inner_product(v, v) == 0.0);

  PEVector u = PEVector::e31(1, 2, 2);
  CHECK(inner_product(u, u) == doctest::Approx(1.0));

  CHECK_THROWS_AS(inner_product(e1, u), SignatureMismatchError);
}

TEST_CASE("is_null") {
  CHECK(is_null(PEVector::e42(1, 0, 1, 0), 1e-12));
  CHECK_FALSE(is_null(PEVector::e42(1, 0, 0, 0), 1e-12));
  CHECK(is_null(PEVector::e42(1, 2, 2, 1), 1e-12));
  // relative scaling: a large nearly-null vector
  CHECK(is_null(PEVector::e42(1e8, 0, 1e8 + 1e-8, 0), 1e-6));
}

TEST_CASE("bilinearity, symmetry, polarization") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> c(-5.0, 5.0);
  auto rand_vec = [&] {
    return PEVector::e42(c(rng), c(rng), c(rng), c(rng));
  };
  for (int i = 0; i < 50; ++i) {
    PEVector u = rand_vec(), v = rand_vec(), w = rand_vec();
    double a = c(rng), b = c(rng);
    CHECK(inner_product(u, v) == doctest::Approx(inner_product(v, u)).epsilon(1e-12));
    CHECK(inner_product(a * u + b * v, w) ==
          doctest::Approx(a * inner_product(u, w) + b * inner_product(v, w))
              .epsilon(1e-12));
    double pol = (inner_product(u + v, u + v) - inner_product(u, u) -
                  inner_product(v, v)) / 2;
    CHECK(inner_product(u, v) == doctest::Approx(pol).epsilon(1e-10));
  }
}
