#include "hysturm/radial.hpp"

#include <cmath>
#include <stdexcept>

#include "hysturm/quadrature.hpp"

namespace hysturm {

namespace {

using cplx = std::complex<double>;

cplx clog(cplx z) { return std::log(z); }  // principal branch

// weighted sample tables for one set at the contour nodes z_i = t_i / s
struct EnvelopeSamples {
  Eigen::MatrixXcd p;   // nodes x count
  Eigen::MatrixXcd dp;  // nodes x count (derivative), filled on demand
};

EnvelopeSamples sample_envelope(const RadialSet& set,
                                const Eigen::VectorXd& t, cplx s, bool deriv) {
  EnvelopeSamples out;
  const int cnt = set.count();
  out.p.resize(t.size(), cnt);
  if (deriv) out.dp.resize(t.size(), cnt);
  for (Eigen::Index i = 0; i < t.size(); ++i) {
    const cplx z = t[i] / s;
    for (int j = 0; j < cnt; ++j) {
      const int n = set.n_min() + j;
      out.p(i, j) = set.eval_envelope_free(n, z);
      if (deriv) out.dp(i, j) = set.eval_envelope_free_deriv(n, z);
    }
  }
  return out;
}

Eigen::MatrixXcd kernel_matrix_n(const RadialSet& a, const RadialSet& b,
                                 RadialKernel kernel, int nodes) {
  const cplx s = a.kappa() + b.kappa();
  if (s.real() <= 0.0)
    throw std::invalid_argument("radial kernel: Re(kappa_a + kappa_b) <= 0");
  QuadratureRule rule = gauss_laguerre(nodes, 0.0, 1.0);
  const bool need_da = kernel == RadialKernel::Kinetic;
  const bool need_db =
      kernel == RadialKernel::DdR || kernel == RadialKernel::Kinetic;
  EnvelopeSamples sa = sample_envelope(a, rule.nodes, s, need_da);
  EnvelopeSamples sb = sample_envelope(b, rule.nodes, s, need_db);
  // S = P e^{-kappa R}, so the envelope-free derivative is dP - kappa P
  if (need_da) sa.dp -= a.kappa() * sa.p;
  if (need_db) sb.dp -= b.kappa() * sb.p;

  Eigen::VectorXcd wk(rule.nodes.size());
  for (Eigen::Index i = 0; i < rule.nodes.size(); ++i) {
    const cplx z = rule.nodes[i] / s;
    cplx k;
    switch (kernel) {
      case RadialKernel::One:
      case RadialKernel::DdR:
      case RadialKernel::Kinetic:
        k = 1.0;
        break;
      case RadialKernel::R:
        k = z;
        break;
      case RadialKernel::InvR:
        k = 1.0 / z;
        break;
      case RadialKernel::InvR2:
        k = 1.0 / (z * z);
        break;
    }
    wk[i] = rule.weights[i] * k / s;
  }
  const Eigen::MatrixXcd& left = need_da ? sa.dp : sa.p;
  const Eigen::MatrixXcd& right = need_db ? sb.dp : sb.p;
  return left.transpose() * wk.asDiagonal() * right;
}

int default_nodes(const RadialSet& a, const RadialSet& b) {
  // integrands are polynomials of degree <= n_a + n_b + 6 times e^{-sR}
  return (a.n_max() + b.n_max() + 8) / 2 + 6;
}

}  // namespace

RadialSet::RadialSet(cplx kappa, int lambda, int count)
    : kappa_(kappa), lambda_(lambda), count_(count) {
  if (lambda < 0) throw std::invalid_argument("RadialSet: lambda < 0");
  if (count < 1) throw std::invalid_argument("RadialSet: empty set");
  if (kappa.real() <= 0.0)
    throw std::invalid_argument("RadialSet: Re(kappa) must be positive");
  log_norm_.resize(count);
  for (int j = 0; j < count; ++j) {
    const int n = lambda_ + 1 + j;
    log_norm_[j] = 0.5 * clog(kappa_ / (n + 1.5)) +
                   (lambda_ + 2.5) * clog(2.0 * kappa_) +
                   0.5 * (std::lgamma(n - lambda_) - std::lgamma(n + lambda_ + 4.0));
  }
}

cplx RadialSet::eval(int n, double R) const {
  if (R < 0.0) throw std::domain_error("RadialSet::eval: R < 0");
  if (R == 0.0) return 0.0;
  return eval_envelope_free(n, R) * std::exp(-kappa_ * R);
}

cplx RadialSet::eval_deriv(int n, double R) const {
  if (R < 0.0) throw std::domain_error("RadialSet::eval_deriv: R < 0");
  if (R == 0.0) return 0.0;
  return (eval_envelope_free_deriv(n, R) - kappa_ * eval_envelope_free(n, R)) *
         std::exp(-kappa_ * R);
}

cplx RadialSet::eval_envelope_free(int n, cplx z) const {
  const int j = n - lambda_ - 1;
  if (j < 0 || j >= count_)
    throw std::invalid_argument("RadialSet: n outside the set");
  const cplx lg = log_norm_[j] + (lambda_ + 2.5) * clog(z);
  return std::exp(lg) * laguerre(j, 2 * lambda_ + 4, 2.0 * kappa_ * z);
}

cplx RadialSet::eval_envelope_free_deriv(int n, cplx z) const {
  const int j = n - lambda_ - 1;
  if (j < 0 || j >= count_)
    throw std::invalid_argument("RadialSet: n outside the set");
  const cplx x = 2.0 * kappa_ * z;
  // d/dz [z^{l+5/2} L_j(2kz)] = z^{l+3/2} [(l+5/2) L_j(x) + x dL_j/dx]
  const cplx lag = laguerre(j, 2 * lambda_ + 4, x);
  const cplx dlag = (j > 0) ? -laguerre(j - 1, 2 * lambda_ + 5, x) : cplx(0.0);
  const cplx lg = log_norm_[j] + (lambda_ + 1.5) * clog(z);
  return std::exp(lg) * ((lambda_ + 2.5) * lag + x * dlag);
}

cplx radial_matrix_element(const RadialSet& a, int na, const RadialSet& b,
                           int nb, RadialKernel kernel) {
  if (kernel == RadialKernel::InvR && a.kappa() == b.kappa() &&
      a.lambda() == b.lambda()) {
    return (na == nb) ? a.kappa() / (na + 1.5) : cplx(0.0);
  }
  const int ia = na - a.n_min(), ib = nb - b.n_min();
  if (ia < 0 || ia >= a.count() || ib < 0 || ib >= b.count())
    throw std::invalid_argument("radial_matrix_element: n outside the set");
  int nodes = (na + nb + 8) / 2 + 6;
  cplx prev = kernel_matrix_n(a, b, kernel, nodes)(ia, ib);
  for (int iter = 0; iter < 6; ++iter) {
    nodes += 16;
    if (nodes > 200)
      throw std::runtime_error("radial_matrix_element: quadrature not converged");
    const cplx next = kernel_matrix_n(a, b, kernel, nodes)(ia, ib);
    if (std::abs(next - prev) <= 1e-12 * std::max(1.0, std::abs(next)))
      return next;
    prev = next;
  }
  throw std::runtime_error("radial_matrix_element: quadrature not converged");
}

Eigen::MatrixXcd radial_kernel_matrix(const RadialSet& a, const RadialSet& b,
                                      RadialKernel kernel) {
  return kernel_matrix_n(a, b, kernel, default_nodes(a, b));
}

Eigen::MatrixXd radial_kernel_matrix_real(const RadialSet& a,
                                          const RadialSet& b,
                                          RadialKernel kernel) {
  if (a.kappa().imag() != 0.0 || b.kappa().imag() != 0.0)
    throw std::invalid_argument("radial_kernel_matrix_real: complex kappa");
  return radial_kernel_matrix(a, b, kernel).real();
}

cplx laguerre(int n, double a, cplx x) {
  if (n == 0) return 1.0;
  cplx p0 = 1.0;
  cplx p1 = 1.0 + a - x;
  for (int k = 1; k < n; ++k) {
    const cplx p2 = ((2.0 * k + 1.0 + a - x) * p1 - (k + a) * p0) / (k + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

}  // namespace hysturm
