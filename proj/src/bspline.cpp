#include "hysturm/bspline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hysturm {

namespace {

constexpr double kHalfPi = 1.5707963267948966;

// Cumulative of the grading density (sin 2u)^(-1/2), inverted on a fine grid.
std::vector<double> graded_breakpoints(int n) {
  const int fine = 20000;
  std::vector<double> u(fine + 1), cdf(fine + 1);
  // midpoint accumulation keeps the integrable endpoint singularity harmless
  cdf[0] = 0.0;
  const double h = kHalfPi / fine;
  for (int i = 0; i <= fine; ++i) u[i] = i * h;
  for (int i = 1; i <= fine; ++i) {
    const double mid = (i - 0.5) * h;
    cdf[i] = cdf[i - 1] + h / std::sqrt(std::sin(2.0 * mid));
  }
  std::vector<double> t(n + 1);
  t[0] = 0.0;
  t[n] = kHalfPi;
  for (int i = 1; i <= n / 2; ++i) {
    const double target = cdf[fine] * i / n;
    auto it = std::lower_bound(cdf.begin(), cdf.end(), target);
    const int k = static_cast<int>(it - cdf.begin());
    const double frac = (target - cdf[k - 1]) / (cdf[k] - cdf[k - 1]);
    t[i] = u[k - 1] + frac * h;
  }
  // mirror the upper half exactly
  for (int i = n / 2 + 1; i < n; ++i) t[i] = kHalfPi - t[n - i];
  t[n / 2] = kHalfPi / 2.0;
  return t;
}

}  // namespace

BsplineBasis::BsplineBasis(int order, const MeshSpec& mesh) : order_(order) {
  if (order < 4) throw std::invalid_argument("BsplineBasis: order must be >= 4");
  if (mesh.intervals < order + 1)
    throw std::invalid_argument("BsplineBasis: too few breakpoints for order");
  if (mesh.intervals % 2 != 0)
    throw std::invalid_argument("BsplineBasis: interval count must be even");

  const int n = mesh.intervals;
  if (mesh.kind == MeshKind::Uniform) {
    breakpoints_.resize(n + 1);
    for (int i = 0; i <= n / 2; ++i) breakpoints_[i] = kHalfPi * i / n;
    for (int i = n / 2 + 1; i <= n; ++i)
      breakpoints_[i] = kHalfPi - breakpoints_[n - i];
  } else {
    breakpoints_ = graded_breakpoints(n);
  }

  knots_.assign(order_ - 1, 0.0);
  knots_.insert(knots_.end(), breakpoints_.begin(), breakpoints_.end());
  knots_.insert(knots_.end(), order_ - 1, kHalfPi);
  // full basis has n + order - 1 splines; edge splines are dropped
  nbasis_ = n + order_ - 3;
}

void BsplineBasis::eval_nonzero(double x, int& first, double* values,
                                double* derivs) const {
  const int k = order_;
  const int nknots = static_cast<int>(knots_.size());
  // locate the knot span [knots_[span], knots_[span+1]) containing x
  int span = static_cast<int>(
      std::upper_bound(knots_.begin() + (k - 1), knots_.end() - k, x) -
      knots_.begin() - 1);
  span = std::clamp(span, k - 1, nknots - k - 1);

  // Cox-de Boor triangle; left/right distances per de Boor's algorithm
  double left[32], right[32], ndu[32];
  ndu[0] = 1.0;
  for (int j = 1; j < k; ++j) {
    left[j] = x - knots_[span + 1 - j];
    right[j] = knots_[span + j] - x;
    double saved = 0.0;
    for (int r = 0; r < j; ++r) {
      const double tmp = ndu[r] / (right[r + 1] + left[j - r]);
      ndu[r] = saved + right[r + 1] * tmp;
      saved = left[j - r] * tmp;
    }
    ndu[j] = saved;
  }
  if (derivs) {
    // derivative from the order k-1 triangle
    double nd[32];
    nd[0] = 1.0;
    for (int j = 1; j < k - 1; ++j) {
      left[j] = x - knots_[span + 1 - j];
      right[j] = knots_[span + j] - x;
      double saved = 0.0;
      for (int r = 0; r < j; ++r) {
        const double tmp = nd[r] / (right[r + 1] + left[j - r]);
        nd[r] = saved + right[r + 1] * tmp;
        saved = left[j - r] * tmp;
      }
      nd[j] = saved;
    }
    for (int r = 0; r < k; ++r) {
      const int i = span - k + 1 + r;
      double d = 0.0;
      if (r > 0) {
        const double den = knots_[i + k - 1] - knots_[i];
        if (den > 0.0) d += nd[r - 1] / den;
      }
      if (r < k - 1) {
        const double den = knots_[i + k] - knots_[i + 1];
        if (den > 0.0) d -= nd[r] / den;
      }
      derivs[r] = (k - 1) * d;
    }
  }
  for (int r = 0; r < k; ++r) values[r] = ndu[r];
  first = span - k + 1 - 1;  // shift by one for the removed first spline
}

double BsplineBasis::eval(int i, double x) const {
  double vals[32];
  int first;
  eval_nonzero(x, first, vals);
  const int off = i - first;
  return (off >= 0 && off < order_) ? vals[off] : 0.0;
}

double BsplineBasis::eval_deriv(int i, double x) const {
  double vals[32], ders[32];
  int first;
  eval_nonzero(x, first, vals, ders);
  const int off = i - first;
  return (off >= 0 && off < order_) ? ders[off] : 0.0;
}

QuadratureRule BsplineBasis::quadrature(int nodes_per_interval) const {
  return composite_legendre(breakpoints_, nodes_per_interval);
}

Eigen::MatrixXd BsplineBasis::sample(const Eigen::VectorXd& x,
                                     bool derivs) const {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(x.size(), nbasis_);
  double vals[32], ders[32];
  for (Eigen::Index r = 0; r < x.size(); ++r) {
    int first;
    eval_nonzero(x[r], first, vals, derivs ? ders : nullptr);
    const double* src = derivs ? ders : vals;
    for (int j = 0; j < order_; ++j) {
      const int idx = first + j;
      if (idx >= 0 && idx < nbasis_) out(r, idx) = src[j];
    }
  }
  return out;
}

}  // namespace hysturm
