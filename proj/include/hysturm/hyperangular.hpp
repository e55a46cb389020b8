#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hysturm/bspline.hpp"
#include "hysturm/quadrature.hpp"

namespace hysturm {

/// Nonlinear parameters of the hyperangular Sturm-Liouville weight.
/// include_v0 = false drops the radial electron repulsion term, giving the
/// independent-electron weight used for the convergence baseline.
struct ReducedChargeParams {
  double calZ = 1.0;
  bool include_v0 = true;
};

/// Piecewise multipole factor v_q(alpha): tan^q(a)/cos(a) below pi/4 and
/// cot^q(a)/sin(a) above; both branches agree at pi/4.
double v_q(int q, double alpha);

/// Reduced effective charge Ctilde(a) = -calZ (1/cos a + 1/sin a) + v0(a).
double ctilde(const ReducedChargeParams& params, double alpha);

/// Sturm-Liouville weight w(a) = -Ctilde(a); nonnegative for calZ >= 1/2.
double sturmian_weight(const ReducedChargeParams& params, double alpha);

/// One family of angular basis functions for a fixed (l1, l2) pair, sampled
/// on a shared quadrature grid. Sturmian families carry their eigenvalues
/// rho_p and B-spline coefficients; the Jacobi family carries neither.
struct AngularFamily {
  int l1 = 0;
  int l2 = 0;
  int lambda = 0;
  Eigen::VectorXd rho;        // ascending, > 0 (empty for Jacobi)
  std::vector<int> parity;    // +-1 about pi/4 when l1 == l2, else 0
  Eigen::MatrixXd values;     // nodes x count
  Eigen::MatrixXd derivs;     // nodes x count
  Eigen::MatrixXd coeffs;     // spline coefficients (empty for Jacobi)

  int count() const { return static_cast<int>(values.cols()); }
};

/// Solve the hyperangular Sturmian problem for one (l1, l2, lambda, calZ)
/// block in the given B-spline basis and keep the n_keep lowest rho_p > 0.
/// The weight matrix must be positive definite (calZ >= 1/2 with v0).
AngularFamily solve_hyperangular(int l1, int l2, int lambda,
                                 const ReducedChargeParams& params,
                                 const BsplineBasis& basis,
                                 const QuadratureRule& quad, int n_keep);

/// Analytic hyperspherical-harmonic family (Jacobi polynomials), normalized
/// under the plain dalpha inner product, sampled on the same grid. Used as
/// the slow-converging comparison baseline.
AngularFamily jacobi_family(int l1, int l2, const QuadratureRule& quad,
                            int n_keep);

/// Value of the p-th member of a spline-backed family at arbitrary alpha.
double family_eval(const AngularFamily& fam, const BsplineBasis& basis, int p,
                   double alpha);

/// Jacobi hyperspherical harmonic (normalized) and its alpha derivative.
double jacobi_eval(int l1, int l2, int p, double alpha);
double jacobi_eval_deriv(int l1, int l2, int p, double alpha);

}  // namespace hysturm
