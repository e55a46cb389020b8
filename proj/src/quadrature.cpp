#include "hysturm/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include "hysturm/linalg.hpp"

namespace hysturm {

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Newton iteration from the Chebyshev estimate of the i-th root.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

QuadratureRule gauss_legendre(int n, double a, double b) {
  QuadratureRule rule = gauss_legendre(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  rule.nodes = (mid + half * rule.nodes.array()).matrix();
  rule.weights *= half;
  return rule;
}

QuadratureRule composite_legendre(const std::vector<double>& breakpoints,
                                  int nodes_per_interval) {
  if (breakpoints.size() < 2)
    throw std::invalid_argument("composite_legendre: need >= 2 breakpoints");
  const QuadratureRule base = gauss_legendre(nodes_per_interval);
  const int nint = static_cast<int>(breakpoints.size()) - 1;
  QuadratureRule rule;
  rule.nodes.resize(nint * nodes_per_interval);
  rule.weights.resize(nint * nodes_per_interval);
  for (int k = 0; k < nint; ++k) {
    const double a = breakpoints[k], b = breakpoints[k + 1];
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < nodes_per_interval; ++i) {
      rule.nodes[k * nodes_per_interval + i] = mid + half * base.nodes[i];
      rule.weights[k * nodes_per_interval + i] = half * base.weights[i];
    }
  }
  return rule;
}

QuadratureRule gauss_laguerre(int n, double alpha, double exponent_scale) {
  if (n < 1) throw std::invalid_argument("gauss_laguerre: n must be >= 1");
  if (alpha <= -1.0)
    throw std::invalid_argument("gauss_laguerre: alpha must be > -1");
  if (exponent_scale <= 0.0)
    throw std::invalid_argument("gauss_laguerre: exponent scale must be > 0");
  // Golub-Welsch on the Laguerre Jacobi matrix.
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    jac(i, i) = 2.0 * i + alpha + 1.0;
    if (i > 0) {
      const double off = std::sqrt(i * (i + alpha));
      jac(i, i - 1) = off;
      jac(i - 1, i) = off;
    }
  }
  auto eig = linalg::sym_eig(jac, true);
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double mu0 = std::tgamma(alpha + 1.0);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = eig.values[i];
    const double v0 = eig.vectors(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  if (exponent_scale != 1.0) {
    rule.nodes /= exponent_scale;
    rule.weights /= std::pow(exponent_scale, alpha + 1.0);
  }
  return rule;
}

}  // namespace hysturm
