#include "hysturm/dipole.hpp"

#include <cmath>
#include <iostream>
#include <map>
#include <stdexcept>
#include <tuple>

#include "angular_gram.hpp"
#include "hysturm/angular.hpp"
#include "hysturm/radial.hpp"

namespace hysturm {

namespace {

using Eigen::MatrixXd;

struct CrossRadialCache {
  const ChannelBasis& bra;
  const ChannelBasis& ket;
  std::map<std::tuple<int, int, int, int, int>, MatrixXd> cache;

  const MatrixXd& get(int sa, int pa, int sb, int pb, RadialKernel k) {
    const auto& ra = *bra.family(sa, pa).radial;
    const auto& rb = *ket.family(sb, pb).radial;
    const auto key = std::make_tuple(sa, sb, ra.lambda(), rb.lambda(),
                                     static_cast<int>(k));
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, radial_kernel_matrix_real(ra, rb, k))
        .first->second;
  }
};

}  // namespace

Eigen::MatrixXd dipole_matrix(const ChannelBasis& bra, const ChannelBasis& ket,
                              Gauge gauge) {
  if (bra.quad().nodes.size() != ket.quad().nodes.size() ||
      (bra.quad().nodes - ket.quad().nodes).cwiseAbs().maxCoeff() > 1e-14)
    throw std::invalid_argument("dipole_matrix: bases on different grids");
  MatrixXd out = MatrixXd::Zero(bra.dim(), ket.dim());
  if (std::abs(bra.block().L - ket.block().L) != 1) {
    std::cerr << "dipole_matrix: |L' - L| != 1, returning a zero block\n";
    return out;
  }

  auto ca = detail::build_component_columns(bra);
  auto cb = detail::build_component_columns(ket);
  detail::GramCache grams(ca, cb, bra.quad());
  CrossRadialCache radial{bra, ket};

  const int Lb = bra.block().L, Mb = bra.block().M;
  const int Lk = ket.block().L, Mk = ket.block().M;

  for (size_t sa = 0; sa < bra.sets().size(); ++sa)
    for (size_t pa = 0; pa < bra.pairs().size(); ++pa)
      for (size_t sb = 0; sb < ket.sets().size(); ++sb)
        for (size_t pb = 0; pb < ket.pairs().size(); ++pb) {
          const auto& fa = bra.family(sa, pa);
          const auto& fb = ket.family(sb, pb);
          const int na = fa.fam.count(), nra = fa.radial->count();
          const int nb = fb.fam.count(), nrb = fb.radial->count();
          const int row0 = bra.block_offset(sa, pa);
          const int col0 = ket.block_offset(sb, pb);

          // angular factor matrices with the radial kernel they multiply
          MatrixXd Ar = MatrixXd::Zero(na, nb);   // <S'|R|S>  (length)
          MatrixXd Arm = MatrixXd::Zero(na, nb);  // R_{n n'} combination
          MatrixXd As = MatrixXd::Zero(na, nb);   // <S'|1/R|S>

          for (size_t ica = 0; ica < fa.components.size(); ++ica)
            for (size_t icb = 0; icb < fb.components.size(); ++icb) {
              const auto& A = fa.components[ica];
              const auto& B = fb.components[icb];
              const double w = A.weight * B.weight;
              const int ca0 = ca.start[sa][pa][ica];
              const int cb0 = cb.start[sb][pb][icb];
              const AngularMomenta am{A.la, A.lb, Lb, Mb};
              const AngularMomenta bm{B.la, B.lb, Lk, Mk};
              const double t1 = dipole_angular_theta1(am, bm);
              const double t2 = dipole_angular_theta2(am, bm);
              if (t1 == 0.0 && t2 == 0.0 && gauge == Gauge::Length) continue;

              auto blk = [&](const Eigen::MatrixXd& g) {
                return g.block(ca0, cb0, na, nb);
              };
              const auto& gcos =
                  grams.vv(detail::kCosA, [](double a) { return std::cos(a); });
              const auto& gsin =
                  grams.vv(detail::kSinA, [](double a) { return std::sin(a); });

              if (gauge == Gauge::Length) {
                Ar += w * (t1 * blk(gcos) + t2 * blk(gsin));
                continue;
              }

              const double d1 = dipole_angular_dtheta1(am, bm);
              const double d2 = dipole_angular_dtheta2(am, bm);
              if (t1 == 0.0 && t2 == 0.0 && d1 == 0.0 && d2 == 0.0) continue;
              const auto& gc2c = grams.vv(detail::kCos2OverCos, [](double a) {
                return std::cos(2.0 * a) / std::cos(a);
              });
              const auto& gc2s = grams.vv(detail::kCos2OverSin, [](double a) {
                return std::cos(2.0 * a) / std::sin(a);
              });
              const auto& ginvc = grams.vv(detail::kInvCos, [](double a) {
                return 1.0 / std::cos(a);
              });
              const auto& ginvs = grams.vv(detail::kInvSin, [](double a) {
                return 1.0 / std::sin(a);
              });
              const auto& gds =
                  grams.vd(detail::kSinA, [](double a) { return std::sin(a); });
              const auto& gdc =
                  grams.vd(detail::kCosA, [](double a) { return std::cos(a); });

              Arm += w * (t1 * blk(gcos) + t2 * blk(gsin));
              As += w * (t1 * (blk(gc2c) - blk(gds)) -
                         t2 * (blk(gc2s) - blk(gdc)) -
                         (d1 * blk(ginvc) + d2 * blk(ginvs)));
            }

          if (gauge == Gauge::Length) {
            if (Ar.cwiseAbs().maxCoeff() == 0.0) continue;
            const auto& rr = radial.get(sa, pa, sb, pb, RadialKernel::R);
            for (int p = 0; p < na; ++p)
              for (int q = 0; q < nb; ++q)
                if (Ar(p, q) != 0.0)
                  out.block(row0 + p * nra, col0 + q * nrb, nra, nrb)
                      .noalias() += Ar(p, q) * rr;
          } else {
            const auto& rd = radial.get(sa, pa, sb, pb, RadialKernel::DdR);
            const auto& r1 = radial.get(sa, pa, sb, pb, RadialKernel::InvR);
            const MatrixXd rmat = rd - 2.5 * r1;
            for (int p = 0; p < na; ++p)
              for (int q = 0; q < nb; ++q) {
                auto blk =
                    out.block(row0 + p * nra, col0 + q * nrb, nra, nrb);
                if (Arm(p, q) != 0.0) blk.noalias() += Arm(p, q) * rmat;
                if (As(p, q) != 0.0) blk.noalias() += As(p, q) * r1;
              }
          }
        }
  return out;
}

std::vector<OscillatorStrength> oscillator_strengths(
    const SpectralResult& initial, const SpectralResult& final_states,
    const Eigen::MatrixXd& dipole_block, Gauge gauge, double constant,
    const std::vector<std::pair<int, int>>& transitions) {
  if (initial.vectors.size() == 0 || final_states.vectors.size() == 0)
    throw std::invalid_argument("oscillator_strengths: missing eigenvectors");
  std::vector<OscillatorStrength> out;
  for (auto [i, f] : transitions) {
    OscillatorStrength os;
    os.initial = i;
    os.final_ = f;
    os.e_initial = initial.energies[i].real();
    os.e_final = final_states.energies[f].real();
    const double de = os.e_final - os.e_initial;
    const double d = (final_states.vectors.col(f).real().transpose() *
                      dipole_block * initial.vectors.col(i).real())(0, 0);
    if (gauge == Gauge::Velocity) {
      if (std::abs(de) < 1e-12)
        throw std::invalid_argument(
            "oscillator_strengths: degenerate transition in velocity gauge");
      os.f = constant / de * d * d;
    } else {
      os.f = constant * de * d * d;
    }
    out.push_back(os);
  }
  return out;
}

}  // namespace hysturm
