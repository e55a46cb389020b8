#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "hysturm/assembly.hpp"

namespace hysturm {

/// Eigenvalues (ascending by real part) and, optionally, eigenvectors in
/// the channel basis. theta records the scaling angle (0 for bound solves;
/// imaginary parts are then exactly zero).
struct SpectralResult {
  Eigen::VectorXcd energies;
  Eigen::MatrixXcd vectors;  // empty unless requested
  double theta = 0.0;
};

/// Real symmetric-definite path: dense eigensolve of the pruned system.
/// Eigenvector phases are fixed by making the largest-magnitude channel
/// coefficient positive.
SpectralResult solve_bound(const PrunedSystem& system, bool vectors = true);

/// Complex-symmetric path at scaling angle theta, solved without
/// conjugation via a dense general eigensolver on the pruned matrices.
SpectralResult solve_scaled(const PrunedSystem& system, double theta,
                            bool vectors = false);

struct ResonanceCandidate {
  double energy = 0.0;  // |Re E|, sign convention of the tables
  double gamma = 0.0;   // width, -2 Im E
  double stability = 0.0;  // |dE/dtheta| estimated from the two runs
};

/// Pair eigenvalues of two theta runs by mutual nearest-neighbor matching
/// in the complex plane and keep theta-stationary points inside the window
/// on Re E. Rotated continuum states move ~2 theta and are rejected by the
/// stability cut; bound states by the minimum width.
std::vector<ResonanceCandidate> extract_resonances(
    const SpectralResult& run1, const SpectralResult& run2, double window_lo,
    double window_hi, double stability_tol = 1e-4, double gamma_min = 1e-7);

}  // namespace hysturm
