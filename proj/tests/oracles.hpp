// Brute-force numerical oracles used only by the test suite. These evaluate
// angular matrix elements by direct quadrature over (theta1, phi1, theta2,
// phi2) with explicit spherical harmonics, independent of the closed-form
// coupling expressions under test.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "hysturm/angular.hpp"
#include "hysturm/quadrature.hpp"
#include "hysturm/wigner.hpp"

namespace oracle {

using cplx = std::complex<double>;

// Associated Legendre P_l^m with Condon-Shortley phase, m >= 0.
inline double assoc_legendre(int l, int m, double x) {
  double pmm = 1.0;
  if (m > 0) {
    const double s = std::sqrt((1.0 - x) * (1.0 + x));
    double fact = 1.0;
    for (int i = 1; i <= m; ++i) {
      pmm *= -fact * s;
      fact += 2.0;
    }
  }
  if (l == m) return pmm;
  double pmmp1 = x * (2.0 * m + 1.0) * pmm;
  if (l == m + 1) return pmmp1;
  double pll = 0.0;
  for (int ll = m + 2; ll <= l; ++ll) {
    pll = (x * (2.0 * ll - 1.0) * pmmp1 - (ll + m - 1.0) * pmm) / (ll - m);
    pmm = pmmp1;
    pmmp1 = pll;
  }
  return pll;
}

inline cplx sph_harm(int l, int m, double theta, double phi) {
  const int am = std::abs(m);
  if (am > l) return 0.0;
  const double norm = std::sqrt((2.0 * l + 1.0) / (4.0 * M_PI) *
                                std::exp(std::lgamma(l - am + 1.0) -
                                         std::lgamma(l + am + 1.0)));
  const double p = assoc_legendre(l, am, std::cos(theta));
  cplx y = norm * p * std::exp(cplx(0.0, am * phi));
  if (m < 0) y = std::conj(y) * ((am % 2 == 0) ? 1.0 : -1.0);
  return y;
}

// d/dtheta Y_lm via the ladder relation.
inline cplx sph_harm_dtheta(int l, int m, double theta, double phi) {
  cplx out = 0.0;
  if (m != 0)
    out += double(m) * std::cos(theta) / std::sin(theta) *
           sph_harm(l, m, theta, phi);
  if (m < l)
    out += std::sqrt((l - m) * (l + m + 1.0)) *
           std::exp(cplx(0.0, -phi)) * sph_harm(l, m + 1, theta, phi);
  return out;
}

// One-electron angular grid: Gauss-Legendre in cos(theta), uniform in phi.
struct SphereGrid {
  std::vector<double> theta, phi, wtheta;
  double wphi;

  explicit SphereGrid(int ntheta = 24, int nphi = 26) {
    auto rule = hysturm::gauss_legendre(ntheta, -1.0, 1.0);
    for (int i = 0; i < ntheta; ++i) {
      theta.push_back(std::acos(rule.nodes[i]));
      wtheta.push_back(rule.weights[i]);
    }
    for (int j = 0; j < nphi; ++j) phi.push_back(2.0 * M_PI * j / nphi);
    wphi = 2.0 * M_PI / nphi;
  }
};

// Bipolar harmonic values on the product grid; rows flatten (itheta, iphi)
// of electron 1, columns of electron 2. dtheta in {0, 1, 2} applies
// sin(theta_i) d/dtheta_i to the corresponding one-electron harmonic.
inline Eigen::MatrixXcd bipolar_on_grid(const hysturm::AngularMomenta& a,
                                        const SphereGrid& g, int dtheta = 0) {
  const int nphi = static_cast<int>(g.phi.size());
  const int n = static_cast<int>(g.theta.size()) * nphi;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
  for (int m1 = -a.l1; m1 <= a.l1; ++m1) {
    const int m2 = a.M - m1;
    if (std::abs(m2) > a.l2) continue;
    const double cg = hysturm::clebsch_gordan(a.l1, m1, a.l2, m2, a.L, a.M);
    if (cg == 0.0) continue;
    Eigen::VectorXcd y1(n), y2(n);
    for (size_t it = 0; it < g.theta.size(); ++it)
      for (int ip = 0; ip < nphi; ++ip) {
        const int idx = static_cast<int>(it) * nphi + ip;
        const double th = g.theta[it], ph = g.phi[ip];
        y1[idx] = (dtheta == 1) ? std::sin(th) * sph_harm_dtheta(a.l1, m1, th, ph)
                                : sph_harm(a.l1, m1, th, ph);
        y2[idx] = (dtheta == 2) ? std::sin(th) * sph_harm_dtheta(a.l2, m2, th, ph)
                                : sph_harm(a.l2, m2, th, ph);
      }
    out += cg * (y1 * y2.transpose());
  }
  return out;
}

// <bra| op(omega1, omega2) |ket> by full 4D quadrature. op receives
// (theta1, phi1, theta2, phi2); dtheta selects sin(theta_i) d/dtheta_i
// applied to the ket (0 none, 1 electron 1, 2 electron 2).
inline double matrix_element_4d(
    const hysturm::AngularMomenta& bra, const hysturm::AngularMomenta& ket,
    const std::function<double(double, double, double, double)>& op,
    int dtheta = 0) {
  static const SphereGrid g;
  const int nphi = static_cast<int>(g.phi.size());

  const Eigen::MatrixXcd kb = bipolar_on_grid(ket, g, dtheta);
  const Eigen::MatrixXcd bb = bipolar_on_grid(bra, g);

  cplx sum = 0.0;
  for (size_t it1 = 0; it1 < g.theta.size(); ++it1)
    for (int ip1 = 0; ip1 < nphi; ++ip1) {
      const int i = static_cast<int>(it1) * nphi + ip1;
      for (size_t it2 = 0; it2 < g.theta.size(); ++it2)
        for (int ip2 = 0; ip2 < nphi; ++ip2) {
          const int j = static_cast<int>(it2) * nphi + ip2;
          const double w = g.wtheta[it1] * g.wtheta[it2] * g.wphi * g.wphi;
          sum += w * std::conj(bb(i, j)) * kb(i, j) *
                 op(g.theta[it1], g.phi[ip1], g.theta[it2], g.phi[ip2]);
        }
    }
  return sum.real();
}

inline double legendre_p(int q, double x) {
  double p0 = 1.0, p1 = x;
  if (q == 0) return p0;
  if (q == 1) return p1;
  for (int k = 2; k <= q; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

}  // namespace oracle
