#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hysturm/quadrature.hpp"

namespace hysturm {

enum class MeshKind { Uniform, Graded };

/// Breakpoint layout on [0, pi/2]. The graded mesh concentrates points near
/// both endpoints with density proportional to (sin 2a)^(-1/2); both kinds
/// are mirror symmetric about pi/4 and place a breakpoint exactly at pi/4.
struct MeshSpec {
  MeshKind kind = MeshKind::Graded;
  int intervals = 300;  // must be even so pi/4 is a breakpoint
};

/// Clamped B-spline basis on [0, pi/2] with the first and last spline
/// removed, so every retained function vanishes at both endpoints.
class BsplineBasis {
 public:
  BsplineBasis(int order, const MeshSpec& mesh);

  int order() const { return order_; }
  int size() const { return nbasis_; }
  const std::vector<double>& breakpoints() const { return breakpoints_; }

  /// Values (and optionally first derivatives) of the `order` splines that
  /// can be nonzero at x; `first` is the retained index of the first one.
  /// Entries falling outside [0, size) belong to the removed edge splines.
  void eval_nonzero(double x, int& first, double* values,
                    double* derivs = nullptr) const;

  double eval(int i, double x) const;
  double eval_deriv(int i, double x) const;

  /// Composite per-interval Gauss-Legendre rule aligned with the breakpoints.
  QuadratureRule quadrature(int nodes_per_interval) const;

  /// Sample matrix of all retained splines at arbitrary points (rows:
  /// points, cols: splines); `derivs` selects d/dx values instead.
  Eigen::MatrixXd sample(const Eigen::VectorXd& x, bool derivs = false) const;

 private:
  int order_;
  int nbasis_;
  std::vector<double> breakpoints_;
  std::vector<double> knots_;
};

}  // namespace hysturm
