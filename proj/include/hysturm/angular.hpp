#pragma once

#include <stdexcept>

namespace hysturm {

/// Quantum numbers of a bipolar harmonic Y^{L,M}_{l1,l2}: the individual
/// electron angular momenta coupled to total (L, M), Condon-Shortley phases.
struct AngularMomenta {
  int l1 = 0;
  int l2 = 0;
  int L = 0;
  int M = 0;

  void validate() const {
    if (l1 < 0 || l2 < 0) throw std::invalid_argument("negative l");
    if (L < std::abs(l1 - l2) || L > l1 + l2)
      throw std::invalid_argument("L outside the triangle of (l1, l2)");
    if (std::abs(M) > L) throw std::invalid_argument("|M| > L");
  }
};

/// <Y'|cos theta_1|Y> between bipolar harmonics. Zero unless l2'=l2,
/// l1'=l1 +/- 1 and the (L, L', 1) coupling closes.
double dipole_angular_theta1(const AngularMomenta& bra,
                             const AngularMomenta& ket);

/// <Y'|cos theta_2|Y>, the electron-2 counterpart.
double dipole_angular_theta2(const AngularMomenta& bra,
                             const AngularMomenta& ket);

/// <Y'|sin theta_1 d/d theta_1|Y>.
double dipole_angular_dtheta1(const AngularMomenta& bra,
                              const AngularMomenta& ket);

/// <Y'|sin theta_2 d/d theta_2|Y>.
double dipole_angular_dtheta2(const AngularMomenta& bra,
                              const AngularMomenta& ket);

/// <Y'|P_q(cos theta_12)|Y>: the angular coefficient multiplying the
/// v_q(alpha) multipole factor of the electron-electron interaction.
/// Scalar operator: requires L'=L, M'=M (otherwise 0).
double multipole_coupling(const AngularMomenta& bra, const AngularMomenta& ket,
                          int q);

}  // namespace hysturm
