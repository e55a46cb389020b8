#include "hysturm/hyperangular.hpp"
#include <algorithm>

#include <cmath>
#include <stdexcept>

#include "hysturm/linalg.hpp"

namespace hysturm {

namespace {
constexpr double kQuarterPi = 0.7853981633974483;

// The spectrum contains one exact rho = 0 member whenever lambda matches a
// hyperspherical-harmonic index (always for lambda = l1 + l2); it completes
// the set and must be kept. Genuinely negative eigenvalues (mismatched
// lambda) are discarded.
constexpr double kRhoNegativeTol = -1e-9;

double jacobi_poly(int n, double a, double b, double x) {
  if (n == 0) return 1.0;
  double p0 = 1.0;
  double p1 = (a + 1.0) + (a + b + 2.0) * 0.5 * (x - 1.0);
  for (int k = 2; k <= n; ++k) {
    const double c1 = 2.0 * k * (k + a + b) * (2.0 * k + a + b - 2.0);
    const double c2 = (2.0 * k + a + b - 1.0) *
                      ((2.0 * k + a + b) * (2.0 * k + a + b - 2.0) * x +
                       a * a - b * b);
    const double c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * (2.0 * k + a + b);
    const double p2 = (c2 * p1 - c3 * p0) / c1;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double jacobi_norm(int l1, int l2, int p) {
  // unit L2(dalpha) norm of cos^{l1+1} sin^{l2+1} P_p^{(l2+1/2, l1+1/2)}(cos 2a)
  const double lg = std::lgamma(p + 1.0) + std::lgamma(p + l1 + l2 + 2.0) -
                    std::lgamma(p + l2 + 1.5) - std::lgamma(p + l1 + 1.5);
  return std::sqrt(2.0 * (2.0 * p + l1 + l2 + 2.0) * std::exp(lg));
}

}  // namespace

double v_q(int q, double alpha) {
  if (alpha < kQuarterPi) {
    return std::pow(std::tan(alpha), q) / std::cos(alpha);
  }
  return std::pow(1.0 / std::tan(alpha), q) / std::sin(alpha);
}

double ctilde(const ReducedChargeParams& params, double alpha) {
  return -sturmian_weight(params, alpha);
}

double sturmian_weight(const ReducedChargeParams& params, double alpha) {
  double w = params.calZ * (1.0 / std::cos(alpha) + 1.0 / std::sin(alpha));
  if (params.include_v0) w -= v_q(0, alpha);
  return w;
}

AngularFamily solve_hyperangular(int l1, int l2, int lambda,
                                 const ReducedChargeParams& params,
                                 const BsplineBasis& basis,
                                 const QuadratureRule& quad, int n_keep) {
  if (l1 < 0 || l2 < 0 || lambda < 0)
    throw std::invalid_argument("solve_hyperangular: negative quantum number");
  if (params.include_v0 && params.calZ < 0.5)
    throw std::invalid_argument(
        "solve_hyperangular: weight loses positivity for calZ < 1/2");
  if (!params.include_v0 && params.calZ <= 0.0)
    throw std::invalid_argument("solve_hyperangular: calZ must be positive");
  if (n_keep > basis.size())
    throw std::invalid_argument("solve_hyperangular: n_keep exceeds basis size");

  const Eigen::MatrixXd bs = basis.sample(quad.nodes, false);
  const Eigen::MatrixXd bd = basis.sample(quad.nodes, true);
  const Eigen::Index nq = quad.nodes.size();

  Eigen::VectorXd diag_a(nq), diag_w(nq);
  const double shift = (lambda + 2.0) * (lambda + 2.0);
  for (Eigen::Index i = 0; i < nq; ++i) {
    const double a = quad.nodes[i];
    const double c = std::cos(a), s = std::sin(a);
    diag_a[i] =
        quad.weights[i] *
        (l1 * (l1 + 1.0) / (c * c) + l2 * (l2 + 1.0) / (s * s) - shift);
    diag_w[i] = quad.weights[i] * sturmian_weight(params, a);
  }
  Eigen::MatrixXd A = bd.transpose() * quad.weights.asDiagonal() * bd;
  A.noalias() += bs.transpose() * diag_a.asDiagonal() * bs;
  const Eigen::MatrixXd W = bs.transpose() * diag_w.asDiagonal() * bs;

  auto eig = linalg::sym_gen_eig(A, W, true);  // A c = mu W c, c^T W c = 1

  AngularFamily fam;
  fam.l1 = l1;
  fam.l2 = l2;
  fam.lambda = lambda;

  const int nb = basis.size();
  std::vector<int> kept;
  for (int i = 0; i < nb && static_cast<int>(kept.size()) < n_keep; ++i) {
    const double rho = 0.5 * eig.values[i];
    if (rho > kRhoNegativeTol) kept.push_back(i);
  }
  const int nkept = static_cast<int>(kept.size());
  if (nkept < n_keep)
    throw std::runtime_error("solve_hyperangular: fewer admissible rho than requested");

  fam.rho.resize(nkept);
  fam.coeffs.resize(nb, nkept);
  fam.parity.assign(nkept, 0);
  for (int j = 0; j < nkept; ++j) {
    fam.rho[j] = std::max(0.5 * eig.values[kept[j]], 0.0);
    Eigen::VectorXd c = eig.vectors.col(kept[j]);
    if (l1 == l2) {
      // definite parity about pi/4: project out the roundoff contamination
      const Eigen::VectorXd r = c.reverse();
      const Eigen::VectorXd even = 0.5 * (c + r);
      const Eigen::VectorXd odd = 0.5 * (c - r);
      if (even.norm() >= odd.norm()) {
        c = even;
        fam.parity[j] = 1;
      } else {
        c = odd;
        fam.parity[j] = -1;
      }
      const double wn = std::sqrt(c.dot(W * c));
      c /= wn;
    }
    // fix the overall sign: positive slope coming off alpha = 0
    for (int i = 0; i < nb; ++i) {
      if (std::abs(c[i]) > 1e-10 * c.norm()) {
        if (c[i] < 0.0) c = -c;
        break;
      }
    }
    fam.coeffs.col(j) = c;
  }
  fam.values = bs * fam.coeffs;
  fam.derivs = bd * fam.coeffs;
  return fam;
}

AngularFamily jacobi_family(int l1, int l2, const QuadratureRule& quad,
                            int n_keep) {
  AngularFamily fam;
  fam.l1 = l1;
  fam.l2 = l2;
  fam.lambda = l1 + l2;  // lowest member; each p has its own Casimir eigenvalue
  const Eigen::Index nq = quad.nodes.size();
  fam.values.resize(nq, n_keep);
  fam.derivs.resize(nq, n_keep);
  fam.parity.assign(n_keep, 0);
  for (int p = 0; p < n_keep; ++p) {
    if (l1 == l2) fam.parity[p] = (p % 2 == 0) ? 1 : -1;
    for (Eigen::Index i = 0; i < nq; ++i) {
      fam.values(i, p) = jacobi_eval(l1, l2, p, quad.nodes[i]);
      fam.derivs(i, p) = jacobi_eval_deriv(l1, l2, p, quad.nodes[i]);
    }
  }
  return fam;
}

double family_eval(const AngularFamily& fam, const BsplineBasis& basis, int p,
                   double alpha) {
  if (fam.coeffs.size() == 0)
    return jacobi_eval(fam.l1, fam.l2, p, alpha);
  double vals[32];
  int first;
  basis.eval_nonzero(alpha, first, vals);
  double out = 0.0;
  for (int j = 0; j < basis.order(); ++j) {
    const int idx = first + j;
    if (idx >= 0 && idx < basis.size()) out += vals[j] * fam.coeffs(idx, p);
  }
  return out;
}

double jacobi_eval(int l1, int l2, int p, double alpha) {
  const double c = std::cos(alpha), s = std::sin(alpha);
  const double x = c * c - s * s;
  return jacobi_norm(l1, l2, p) * std::pow(c, l1 + 1) * std::pow(s, l2 + 1) *
         jacobi_poly(p, l2 + 0.5, l1 + 0.5, x);
}

double jacobi_eval_deriv(int l1, int l2, int p, double alpha) {
  const double c = std::cos(alpha), s = std::sin(alpha);
  const double x = c * c - s * s;
  const double a = l2 + 0.5, b = l1 + 0.5;
  const double P = jacobi_poly(p, a, b, x);
  const double Pd =
      (p > 0) ? 0.5 * (p + a + b + 1.0) * jacobi_poly(p - 1, a + 1.0, b + 1.0, x)
              : 0.0;
  const double n = jacobi_norm(l1, l2, p);
  return n * (-(l1 + 1.0) * std::pow(c, l1) * std::pow(s, l2 + 2) * P +
              (l2 + 1.0) * std::pow(c, l1 + 2) * std::pow(s, l2) * P -
              4.0 * std::pow(c, l1 + 2) * std::pow(s, l2 + 2) * Pd);
}

}  // namespace hysturm
