#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hysturm/channel_basis.hpp"
#include "hysturm/solver.hpp"

namespace hysturm {

enum class Gauge { Length, Velocity };

/// z-polarized electric-dipole matrix between two channel bases (bra rows,
/// ket columns), M = M' = 0. Returns a zero block with a warning on stderr
/// when |L' - L| != 1. Both bases must share the spline mesh and quadrature.
/// The block is in the raw channel basis; rescale with the AssembledSystem
/// norms of both blocks before contracting with their eigenvectors.
Eigen::MatrixXd dipole_matrix(const ChannelBasis& bra, const ChannelBasis& ket,
                              Gauge gauge);

struct OscillatorStrength {
  int initial = 0;  // state index in the initial-block spectrum
  int final_ = 0;
  double e_initial = 0.0;
  double e_final = 0.0;
  double f = 0.0;
};

/// f = C (E_f - E_i) |<f|D_L|i>|^2 (length) or C/(E_f - E_i) |<f|D_V|i>|^2
/// (velocity), contracting the dipole block with the bound eigenvectors.
/// C is 2 for S->P and 5/3 for P->D transitions.
std::vector<OscillatorStrength> oscillator_strengths(
    const SpectralResult& initial, const SpectralResult& final_states,
    const Eigen::MatrixXd& dipole_block, Gauge gauge, double constant,
    const std::vector<std::pair<int, int>>& transitions);

}  // namespace hysturm
