#include "hysturm/angular.hpp"

#include <cmath>
#include <cstdint>
#include <unordered_map>

#include "hysturm/wigner.hpp"

namespace hysturm {

namespace {

double phase(int n) { return (((n % 2) + 2) % 2 == 0) ? 1.0 : -1.0; }

// Factors A, B and C(l), E(l) entering the dipole angular matrix elements.
double factor_A(const AngularMomenta& bra, const AngularMomenta& ket) {
  if (bra.l2 != ket.l2) return 0.0;
  return phase(ket.l2 - bra.M) *
         std::sqrt((2.0 * ket.L + 1.0) * (2.0 * bra.L + 1.0) *
                   (2.0 * ket.l1 + 1.0)) *
         wigner3j(ket.L, bra.L, 1, -ket.M, bra.M, 0);
}

double factor_B(const AngularMomenta& bra, const AngularMomenta& ket) {
  if (bra.l1 != ket.l1) return 0.0;
  return phase(ket.l1 - bra.M) *
         std::sqrt((2.0 * ket.L + 1.0) * (2.0 * bra.L + 1.0) *
                   (2.0 * ket.l2 + 1.0)) *
         wigner3j(ket.L, 1, bra.L, -ket.M, 0, bra.M);
}

double factor_C(const AngularMomenta& bra, const AngularMomenta& ket, int l) {
  if (l < 0 || bra.l1 != l) return 0.0;
  return std::sqrt(2.0 * l + 1.0) * wigner3j(l, 1, ket.l1, 0, 0, 0) *
         wigner6j(ket.L, bra.L, 1, l, ket.l1, ket.l2);
}

double factor_E(const AngularMomenta& bra, const AngularMomenta& ket, int l) {
  if (l < 0 || bra.l2 != l) return 0.0;
  return std::sqrt(2.0 * l + 1.0) * wigner3j(l, 1, ket.l2, 0, 0, 0) *
         wigner6j(ket.L, 1, bra.L, l, ket.l1, ket.l2);
}

}  // namespace

double dipole_angular_theta1(const AngularMomenta& bra,
                             const AngularMomenta& ket) {
  bra.validate();
  ket.validate();
  const double a = factor_A(bra, ket);
  if (a == 0.0) return 0.0;
  return a * (factor_C(bra, ket, ket.l1 + 1) + factor_C(bra, ket, ket.l1 - 1));
}

double dipole_angular_theta2(const AngularMomenta& bra,
                             const AngularMomenta& ket) {
  bra.validate();
  ket.validate();
  const double b = factor_B(bra, ket);
  if (b == 0.0) return 0.0;
  return b * (factor_E(bra, ket, ket.l2 + 1) + factor_E(bra, ket, ket.l2 - 1));
}

double dipole_angular_dtheta1(const AngularMomenta& bra,
                              const AngularMomenta& ket) {
  bra.validate();
  ket.validate();
  const double a = factor_A(bra, ket);
  if (a == 0.0) return 0.0;
  return a * (ket.l1 * factor_C(bra, ket, ket.l1 + 1) -
              (ket.l1 + 1) * factor_C(bra, ket, ket.l1 - 1));
}

double dipole_angular_dtheta2(const AngularMomenta& bra,
                              const AngularMomenta& ket) {
  bra.validate();
  ket.validate();
  const double b = factor_B(bra, ket);
  if (b == 0.0) return 0.0;
  return b * (ket.l2 * factor_E(bra, ket, ket.l2 + 1) -
              (ket.l2 + 1) * factor_E(bra, ket, ket.l2 - 1));
}

double multipole_coupling(const AngularMomenta& bra, const AngularMomenta& ket,
                          int q) {
  bra.validate();
  ket.validate();
  if (q < 0) throw std::invalid_argument("multipole_coupling: q < 0");
  if (bra.L != ket.L || bra.M != ket.M) return 0.0;  // scalar operator
  // selection rules: both triads must close with even parity
  if ((bra.l1 + ket.l1 + q) % 2 != 0 || (bra.l2 + ket.l2 + q) % 2 != 0)
    return 0.0;
  if (q < std::abs(bra.l1 - ket.l1) || q > bra.l1 + ket.l1) return 0.0;
  if (q < std::abs(bra.l2 - ket.l2) || q > bra.l2 + ket.l2) return 0.0;

  thread_local std::unordered_map<uint64_t, double> cache;
  auto u = [](int x) { return static_cast<uint64_t>(x) & 0xFF; };
  const uint64_t key = u(bra.l1) | (u(bra.l2) << 8) | (u(ket.l1) << 16) |
                       (u(ket.l2) << 24) | (u(ket.L) << 32) |
                       (u(ket.M + 64) << 40) | (u(q) << 48);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  // Contract P_q(cos theta_12) = (4pi/(2q+1)) sum_mu Y*_{q mu}(1) Y_{q mu}(2)
  // over the Clebsch-Gordan structure of both bipolar harmonics.
  const double pre = std::sqrt((2.0 * ket.l1 + 1.0) * (2.0 * bra.l1 + 1.0) *
                               (2.0 * ket.l2 + 1.0) * (2.0 * bra.l2 + 1.0)) *
                     wigner3j(q, ket.l1, bra.l1, 0, 0, 0) *
                     wigner3j(q, ket.l2, bra.l2, 0, 0, 0);
  double sum = 0.0;
  for (int m1 = -ket.l1; m1 <= ket.l1; ++m1) {
    const int m2 = ket.M - m1;
    if (std::abs(m2) > ket.l2) continue;
    const double cg_ket = clebsch_gordan(ket.l1, m1, ket.l2, m2, ket.L, ket.M);
    if (cg_ket == 0.0) continue;
    for (int m1p = -bra.l1; m1p <= bra.l1; ++m1p) {
      const int mu = m1 - m1p;
      if (std::abs(mu) > q) continue;
      const int m2p = bra.M - m1p;
      if (std::abs(m2p) > bra.l2) continue;
      const double cg_bra =
          clebsch_gordan(bra.l1, m1p, bra.l2, m2p, bra.L, bra.M);
      if (cg_bra == 0.0) continue;
      sum += phase(mu + m1p + m2p) * cg_bra * cg_ket *
             wigner3j(q, ket.l1, bra.l1, -mu, m1, -m1p) *
             wigner3j(q, ket.l2, bra.l2, mu, m2, -m2p);
    }
  }
  const double val = pre * sum;
  cache.emplace(key, val);
  return val;
}

}  // namespace hysturm
