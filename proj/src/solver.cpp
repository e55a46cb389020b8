#include "hysturm/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "hysturm/linalg.hpp"

namespace hysturm {

SpectralResult solve_bound(const PrunedSystem& system, bool vectors) {
  Eigen::MatrixXd h = system.hamiltonian();
  h = 0.5 * (h + h.transpose()).eval();
  auto eig = linalg::sym_eig(h, vectors);

  SpectralResult out;
  out.theta = 0.0;
  out.energies = eig.values.cast<std::complex<double>>();
  if (vectors) {
    Eigen::MatrixXd v = system.W * eig.vectors;
    for (Eigen::Index j = 0; j < v.cols(); ++j) {
      Eigen::Index imax;
      v.col(j).cwiseAbs().maxCoeff(&imax);
      if (v(imax, j) < 0.0) v.col(j) = -v.col(j);
    }
    out.vectors = v.cast<std::complex<double>>();
  }
  return out;
}

SpectralResult solve_scaled(const PrunedSystem& system, double theta,
                            bool vectors) {
  if (theta < 0.0 || theta >= M_PI / 4.0)
    throw std::invalid_argument("solve_scaled: theta outside [0, pi/4)");
  auto eig = linalg::complex_eig(system.hamiltonian_scaled(theta), vectors);

  std::vector<int> order(eig.values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return eig.values[a].real() < eig.values[b].real();
  });

  SpectralResult out;
  out.theta = theta;
  out.energies.resize(eig.values.size());
  for (size_t i = 0; i < order.size(); ++i)
    out.energies[i] = eig.values[order[i]];
  if (vectors) {
    out.vectors.resize(system.W.rows(), eig.vectors.cols());
    for (size_t i = 0; i < order.size(); ++i)
      out.vectors.col(i) =
          system.W.cast<std::complex<double>>() * eig.vectors.col(order[i]);
  }
  return out;
}

std::vector<ResonanceCandidate> extract_resonances(
    const SpectralResult& run1, const SpectralResult& run2, double window_lo,
    double window_hi, double stability_tol, double gamma_min) {
  if (window_lo > window_hi)
    throw std::invalid_argument("extract_resonances: empty window");
  const double dtheta = std::abs(run2.theta - run1.theta);
  if (dtheta == 0.0)
    throw std::invalid_argument("extract_resonances: runs share one theta");

  std::vector<ResonanceCandidate> out;
  std::vector<bool> used(run2.energies.size(), false);
  for (Eigen::Index i = 0; i < run1.energies.size(); ++i) {
    const std::complex<double> e1 = run1.energies[i];
    if (e1.real() < window_lo || e1.real() > window_hi) continue;
    if (-2.0 * e1.imag() < gamma_min) continue;  // bound or spurious
    // nearest neighbor in the second run
    Eigen::Index jbest = -1;
    double dbest = 1e300;
    for (Eigen::Index j = 0; j < run2.energies.size(); ++j) {
      if (used[j]) continue;
      const double d = std::abs(run2.energies[j] - e1);
      if (d < dbest) {
        dbest = d;
        jbest = j;
      }
    }
    if (jbest < 0 || dbest > stability_tol) continue;
    used[jbest] = true;
    ResonanceCandidate cand;
    cand.energy = std::abs(e1.real());
    cand.gamma = -2.0 * e1.imag();
    cand.stability = dbest / dtheta;
    out.push_back(cand);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.energy > b.energy;  // deepest (most negative Re E) first
  });
  return out;
}

}  // namespace hysturm
