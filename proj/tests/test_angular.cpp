#include <doctest.h>

#include <cmath>
#include <vector>

#include "hysturm/angular.hpp"
#include "oracles.hpp"

using hysturm::AngularMomenta;

namespace {

// every (l1, l2, L) combination with l <= lmax coupling to M = 0
std::vector<AngularMomenta> all_momenta(int lmax, int Lmax) {
  std::vector<AngularMomenta> out;
  for (int l1 = 0; l1 <= lmax; ++l1)
    for (int l2 = 0; l2 <= lmax; ++l2)
      for (int L = std::abs(l1 - l2); L <= std::min(l1 + l2, Lmax); ++L)
        out.push_back({l1, l2, L, 0});
  return out;
}

double op_costheta1(double t1, double, double, double) { return std::cos(t1); }
double op_costheta2(double, double, double t2, double) { return std::cos(t2); }
double op_one(double, double, double, double) { return 1.0; }

}  // namespace

TEST_CASE("oracle sanity: sph_harm against closed forms") {
  const double th = 0.7, ph = 1.9;
  CHECK(oracle::sph_harm(0, 0, th, ph).real() ==
        doctest::Approx(0.5 / std::sqrt(M_PI)).epsilon(1e-14));
  const auto y11 = oracle::sph_harm(1, 1, th, ph);
  const auto ref = -std::sqrt(3.0 / (8.0 * M_PI)) * std::sin(th) *
                   std::exp(std::complex<double>(0, ph));
  CHECK(std::abs(y11 - ref) < 1e-14);
  const auto y20 = oracle::sph_harm(2, 0, th, ph);
  CHECK(y20.real() == doctest::Approx(std::sqrt(5.0 / (16.0 * M_PI)) *
                                      (3.0 * std::pow(std::cos(th), 2) - 1.0))
                          .epsilon(1e-13));
  // derivative ladder against finite differences
  const double h = 1e-6;
  const auto fd = (oracle::sph_harm(3, 1, th + h, ph) -
                   oracle::sph_harm(3, 1, th - h, ph)) /
                  (2.0 * h);
  CHECK(std::abs(oracle::sph_harm_dtheta(3, 1, th, ph) - fd) < 1e-8);
}

TEST_CASE("oracle sanity: bipolar orthonormality by 4D quadrature") {
  const AngularMomenta a{1, 1, 0, 0}, b{1, 1, 2, 0};
  CHECK(oracle::matrix_element_4d(a, a, op_one) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(oracle::matrix_element_4d(a, b, op_one)) < 1e-12);
}

TEST_CASE("dipole_angular_theta1 fixed values") {
  const AngularMomenta ket{0, 0, 0, 0};
  const AngularMomenta bra{1, 0, 1, 0};
  CHECK(hysturm::dipole_angular_theta1(bra, ket) ==
        doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-13));
  // l2' != l2 kills the Kronecker delta
  CHECK(hysturm::dipole_angular_theta1({1, 1, 1, 0}, {0, 0, 0, 0}) == 0.0);
  CHECK(hysturm::dipole_angular_theta1({1, 1, 1, 0}, {1, 1, 1, 0}) == 0.0);
}

TEST_CASE("dipole angular factors against the 4D quadrature oracle") {
  const auto kets = all_momenta(3, 4);
  const auto bras = all_momenta(3, 4);
  int checked = 0;
  for (const auto& ket : kets)
    for (const auto& bra : bras) {
      if (std::abs(bra.L - ket.L) > 1) continue;
      if (bra.l2 == ket.l2 && std::abs(bra.l1 - ket.l1) == 1) {
        const double got = hysturm::dipole_angular_theta1(bra, ket);
        const double ref = oracle::matrix_element_4d(bra, ket, op_costheta1);
        CHECK(got == doctest::Approx(ref).epsilon(1e-10).scale(1.0));
        const double got_d = hysturm::dipole_angular_dtheta1(bra, ket);
        const double ref_d = oracle::matrix_element_4d(bra, ket, op_one, 1);
        CHECK(got_d == doctest::Approx(ref_d).epsilon(1e-10).scale(1.0));
        ++checked;
      }
      if (bra.l1 == ket.l1 && std::abs(bra.l2 - ket.l2) == 1) {
        const double got = hysturm::dipole_angular_theta2(bra, ket);
        const double ref = oracle::matrix_element_4d(bra, ket, op_costheta2);
        CHECK(got == doctest::Approx(ref).epsilon(1e-10).scale(1.0));
        const double got_d = hysturm::dipole_angular_dtheta2(bra, ket);
        const double ref_d = oracle::matrix_element_4d(bra, ket, op_one, 2);
        CHECK(got_d == doctest::Approx(ref_d).epsilon(1e-10).scale(1.0));
      }
    }
  CHECK(checked > 30);
}

TEST_CASE("dipole selection rules (zero without error)") {
  // L' = L with M = M' = 0: the (L L 1; 0 0 0) symbol vanishes
  CHECK(hysturm::dipole_angular_theta1({1, 0, 1, 0}, {0, 1, 1, 0}) == 0.0);
  // l1' = l1 gives no C factor
  CHECK(hysturm::dipole_angular_dtheta1({1, 0, 1, 0}, {1, 0, 1, 0}) == 0.0);
}

TEST_CASE("multipole_coupling fixed values and symmetry") {
  // monopole is the identity in the angles
  const AngularMomenta a{2, 3, 1, 0};
  CHECK(hysturm::multipole_coupling(a, a, 0) ==
        doctest::Approx(1.0).epsilon(1e-13));
  // q = 1 between (1,1;L=0) and (0,0;L=0): -1/sqrt(3)
  CHECK(hysturm::multipole_coupling({1, 1, 0, 0}, {0, 0, 0, 0}, 1) ==
        doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-13));
  // scalar operator: L' != L vanishes
  CHECK(hysturm::multipole_coupling({1, 1, 2, 0}, {1, 1, 0, 0}, 2) == 0.0);
  // bra <-> ket symmetry
  const AngularMomenta b1{2, 2, 2, 0}, b2{0, 2, 2, 0};
  CHECK(hysturm::multipole_coupling(b1, b2, 2) ==
        doctest::Approx(hysturm::multipole_coupling(b2, b1, 2)).epsilon(1e-13));
}

TEST_CASE("multipole_coupling against the 4D quadrature oracle") {
  const auto kets = all_momenta(3, 3);
  int checked = 0;
  for (const auto& ket : kets)
    for (const auto& bra : kets) {
      if (bra.L != ket.L) continue;
      for (int q = 0; q <= 4; ++q) {
        if ((bra.l1 + ket.l1 + q) % 2 != 0) continue;
        if (q < std::abs(bra.l1 - ket.l1) || q > bra.l1 + ket.l1) continue;
        if (q < std::abs(bra.l2 - ket.l2) || q > bra.l2 + ket.l2) continue;
        const double got = hysturm::multipole_coupling(bra, ket, q);
        auto op = [q](double t1, double p1, double t2, double p2) {
          const double c12 = std::cos(t1) * std::cos(t2) +
                             std::sin(t1) * std::sin(t2) * std::cos(p1 - p2);
          return oracle::legendre_p(q, c12);
        };
        const double ref = oracle::matrix_element_4d(bra, ket, op);
        CHECK(got == doctest::Approx(ref).epsilon(1e-10).scale(1.0));
        ++checked;
      }
    }
  CHECK(checked > 40);
}

TEST_CASE("M independence of the scalar coupling") {
  const AngularMomenta b0{1, 2, 2, 0}, k0{2, 1, 2, 0};
  const AngularMomenta b1{1, 2, 2, 1}, k1{2, 1, 2, 1};
  CHECK(hysturm::multipole_coupling(b1, k1, 1) ==
        doctest::Approx(hysturm::multipole_coupling(b0, k0, 1)).epsilon(1e-13));
}
