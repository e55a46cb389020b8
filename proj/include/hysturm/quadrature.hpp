#pragma once

#include <Eigen/Dense>
#include <functional>

namespace hysturm {

/// Nodes and weights of a quadrature rule. For Gauss-Legendre the nodes live
/// on the requested interval; for (generalized) Gauss-Laguerre on [0, inf)
/// with weight x^alpha exp(-x) absorbed into the weights.
struct QuadratureRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;

  double integrate(const std::function<double(double)>& f) const {
    double s = 0.0;
    for (Eigen::Index i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
    return s;
  }
};

/// n-point Gauss-Legendre rule on [-1, 1].
QuadratureRule gauss_legendre(int n);

/// n-point Gauss-Legendre rule mapped to [a, b].
QuadratureRule gauss_legendre(int n, double a, double b);

/// Composite per-interval Gauss-Legendre rule over the given breakpoints.
QuadratureRule composite_legendre(const std::vector<double>& breakpoints,
                                  int nodes_per_interval);

/// n-point generalized Gauss-Laguerre rule, weight x^alpha e^{-x} on [0, inf).
/// `exponent_scale` b rescales to integrals against e^{-b R}: nodes become
/// x/b and weights pick up the 1/b^(alpha+1) Jacobian.
QuadratureRule gauss_laguerre(int n, double alpha = 0.0,
                              double exponent_scale = 1.0);

}  // namespace hysturm
