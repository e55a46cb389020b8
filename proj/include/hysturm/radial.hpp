#pragma once

#include <Eigen/Dense>
#include <complex>

namespace hysturm {

enum class RadialKernel { One, R, InvR, InvR2, DdR, Kinetic };

/// Analytic Coulomb Sturmians of half-integer angular index,
/// S_n(R) = N R^{lambda+5/2} e^{-kappa R} L_{n-lambda-1}^{2 lambda+4}(2 kappa R)
/// for n = lambda+1 .. lambda+count. kappa may be complex (kappa e^{-i theta}
/// implements the complex scaling of the hyperradius).
class RadialSet {
 public:
  RadialSet(std::complex<double> kappa, int lambda, int count);

  std::complex<double> kappa() const { return kappa_; }
  int lambda() const { return lambda_; }
  int count() const { return count_; }
  int n_min() const { return lambda_ + 1; }
  int n_max() const { return lambda_ + count_; }

  std::complex<double> eval(int n, double R) const;
  std::complex<double> eval_deriv(int n, double R) const;

  /// Sturmian without its exponential factor, at a (possibly complex) point:
  /// P_n(z) = N z^{lambda+5/2} L(2 kappa z), so S_n = P_n e^{-kappa z}.
  std::complex<double> eval_envelope_free(int n, std::complex<double> z) const;
  std::complex<double> eval_envelope_free_deriv(int n,
                                                std::complex<double> z) const;

 private:
  std::complex<double> kappa_;
  int lambda_;
  int count_;
  std::vector<std::complex<double>> log_norm_;  // per n
};

/// Single matrix element <S_A nA | kernel | S_B nB> over [0, inf), no
/// conjugation (complex-symmetric convention). Gauss-Laguerre on the rotated
/// contour, node count raised until stable to 1e-12; the same-kappa 1/R
/// element returns its closed form kappa/(n+3/2) delta_{n n'}.
std::complex<double> radial_matrix_element(const RadialSet& a, int na,
                                           const RadialSet& b, int nb,
                                           RadialKernel kernel);

/// Full kernel matrix between two sets (rows: a, cols: b), exact quadrature.
Eigen::MatrixXcd radial_kernel_matrix(const RadialSet& a, const RadialSet& b,
                                      RadialKernel kernel);

/// Real-arithmetic view for unscaled sets.
Eigen::MatrixXd radial_kernel_matrix_real(const RadialSet& a,
                                          const RadialSet& b,
                                          RadialKernel kernel);

/// Generalized Laguerre polynomial L_n^{(a)}(x) by upward recurrence.
std::complex<double> laguerre(int n, double a, std::complex<double> x);

}  // namespace hysturm
