#pragma once

#include <Eigen/Dense>
#include <complex>

#include "hysturm/channel_basis.hpp"

namespace hysturm {

/// Hamiltonian and overlap of one symmetry block in the channel basis,
/// split by the power of 1/R so that complex scaling of the hyperradius
/// (kappa -> kappa e^{-i theta}) reduces to phase factors:
///   H(theta) = e^{-2 i theta} H2 + e^{-i theta} H1,   S(theta) = S.
/// Basis vectors are normalized to unit diagonal of S.
struct AssembledSystem {
  Eigen::MatrixXd H2;  // radial kinetic + (reduced Casimir)/2R^2
  Eigen::MatrixXd H1;  // effective charge C(alpha, r1^, r2^)/R
  Eigen::MatrixXd S;
  Eigen::VectorXd norms;  // applied diagonal normalization
  int q_max = 0;

  int dim() const { return static_cast<int>(S.rows()); }
  Eigen::MatrixXd hamiltonian() const { return H2 + H1; }
  Eigen::MatrixXcd hamiltonian_scaled(double theta) const {
    const std::complex<double> i(0.0, 1.0);
    return std::exp(-2.0 * i * theta) * H2.cast<std::complex<double>>() +
           std::exp(-i * theta) * H1.cast<std::complex<double>>();
  }
};

/// Assemble H and S for the block. q_max < 0 selects 2*max(l) over the
/// pairs (exact under the triangular selection rules); include_ee = false
/// drops the whole electron-electron multipole sum (independent-electron
/// model).
AssembledSystem assemble(const ChannelBasis& basis, double Z, int q_max = -1,
                         bool include_ee = true);

/// Overlap-pruned system: basis directions with S-eigenvalues below
/// threshold * max eigenvalue are removed; the back-transform W maps the
/// retained orthonormal coordinates to channel coefficients, W^T S W = 1.
struct PrunedSystem {
  Eigen::MatrixXd W;
  Eigen::MatrixXd H2;
  Eigen::MatrixXd H1;
  Eigen::VectorXd overlap_eigs;  // full spectrum of S, ascending
  int discarded = 0;
  double threshold = 0.0;

  int dim() const { return static_cast<int>(H2.rows()); }
  Eigen::MatrixXd hamiltonian() const { return H2 + H1; }
  Eigen::MatrixXcd hamiltonian_scaled(double theta) const {
    const std::complex<double> i(0.0, 1.0);
    return std::exp(-2.0 * i * theta) * H2.cast<std::complex<double>>() +
           std::exp(-i * theta) * H1.cast<std::complex<double>>();
  }
};

PrunedSystem prune(const AssembledSystem& system, double threshold = 1e-10);

}  // namespace hysturm
