#include <doctest.h>

#include <cmath>

#include "hysturm/quadrature.hpp"

using hysturm::gauss_laguerre;
using hysturm::gauss_legendre;

TEST_CASE("gauss_legendre polynomial exactness up to 2n-1") {
  for (int n : {2, 5, 9, 16}) {
    auto rule = gauss_legendre(n, 0.0, 1.0);
    for (int k = 0; k <= 2 * n - 1; ++k) {
      const double got = rule.integrate([k](double x) { return std::pow(x, k); });
      CHECK(got == doctest::Approx(1.0 / (k + 1.0)).epsilon(1e-13));
    }
  }
}

TEST_CASE("integral of sin over [0, pi/2] is 1") {
  auto rule = gauss_legendre(12, 0.0, M_PI / 2.0);
  CHECK(rule.integrate([](double a) { return std::sin(a); }) ==
        doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("composite rule matches single-panel rule") {
  auto whole = gauss_legendre(40, 0.0, 2.0);
  auto split = hysturm::composite_legendre({0.0, 0.5, 1.1, 2.0}, 14);
  auto f = [](double x) { return std::exp(-x) * std::cos(3.0 * x); };
  CHECK(whole.integrate(f) == doctest::Approx(split.integrate(f)).epsilon(1e-13));
}

TEST_CASE("gauss_laguerre reproduces k! up to 2n-1") {
  for (int n : {4, 10, 24}) {
    auto rule = gauss_laguerre(n);
    double expect = 1.0;
    for (int k = 0; k <= 2 * n - 1; ++k) {
      if (k > 0) expect *= k;
      const double got =
          rule.integrate([k](double x) { return std::pow(x, k); });
      CHECK(got == doctest::Approx(expect).epsilon(1e-11));
    }
  }
}

TEST_CASE("gauss_laguerre exponent scale") {
  // int_0^inf R^3 e^{-2R} dR = 3!/2^4
  auto rule = gauss_laguerre(8, 0.0, 2.0);
  CHECK(rule.integrate([](double r) { return r * r * r; }) ==
        doctest::Approx(6.0 / 16.0).epsilon(1e-13));
}

TEST_CASE("generalized gauss_laguerre with alpha") {
  // int x^(1/2) e^-x dx = Gamma(3/2)
  auto rule = gauss_laguerre(10, 0.5);
  CHECK(rule.integrate([](double) { return 1.0; }) ==
        doctest::Approx(std::tgamma(1.5)).epsilon(1e-13));
}

TEST_CASE("node-count doubling leaves converged results unchanged") {
  auto f = [](double x) { return std::exp(-0.3 * x) * (1.0 + x * x); };
  // smooth integrand against e^{-x}: converged well before n = 40
  const double a = gauss_laguerre(40).integrate(f);
  const double b = gauss_laguerre(80).integrate(f);
  CHECK(std::abs(a - b) < 1e-13 * std::abs(a));
}
