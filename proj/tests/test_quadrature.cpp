#include <doctest.h>

#include "fraclab/errors.hpp"
#include "fraclab/quadrature.hpp"

#include <cmath>

using namespace fraclab;

TEST_CASE("adaptive quadrature on known integrals") {
  auto r = integrate([](double x) { return std::sin(x); }, 0.0, M_PI);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-13));

  r = integrate([](double x) { return std::exp(-x * x); }, -8.0, 8.0);
  CHECK(r.value == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-13));

  // mildly singular endpoint
  r = integrate([](double x) { return 1.0 / std::sqrt(x); }, 1e-12, 1.0, 1e-10,
                1e-10);
  CHECK(r.value == doctest::Approx(2.0 - 2e-6).epsilon(1e-8));
}

TEST_CASE("semi-infinite quadrature") {
  auto r = integrate_to_inf([](double x) { return std::exp(-x); }, 0.0);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));

  r = integrate_to_inf([](double x) { return std::exp(-x) * x * x; }, 0.0);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-12));

  // shifted lower limit
  r = integrate_to_inf([](double x) { return std::exp(-x); }, 3.0);
  CHECK(r.value == doctest::Approx(std::exp(-3.0)).epsilon(1e-12));
}

TEST_CASE("panel budget exhaustion throws") {
  CHECK_THROWS_AS(integrate([](double x) { return std::sin(1.0 / x); }, 1e-14,
                            1.0, 1e-15, 1e-15, 8),
                  QuadratureError);
}

TEST_CASE("Gauss-Laguerre rule integrates polynomials against e^{-x}") {
  auto rule = gauss_laguerre(16);
  REQUIRE(rule.size() == 16);
  // int_0^inf e^-x x^n dx = n!
  for (int n : {0, 1, 2, 5, 10}) {
    double acc = 0.0;
    for (auto [x, w] : rule) acc += w * std::pow(x, n);
    CHECK(acc == doctest::Approx(std::tgamma(n + 1.0)).epsilon(1e-11));
  }
  double wsum = 0.0;
  for (auto [x, w] : rule) wsum += w;
  CHECK(wsum == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("Gauss-Legendre rule is exact up to degree 2n-1") {
  auto rule = gauss_legendre(8);
  REQUIRE(rule.size() == 8);
  for (int n : {0, 2, 4, 8, 14}) {
    double acc = 0.0;
    for (auto [x, w] : rule) acc += w * std::pow(x, n);
    CHECK(acc == doctest::Approx(2.0 / (n + 1.0)).epsilon(1e-13));
  }
  // odd powers vanish by symmetry
  double acc = 0.0;
  for (auto [x, w] : rule) acc += w * x * x * x;
  CHECK(std::fabs(acc) < 1e-14);
}
