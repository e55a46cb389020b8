#include "hysturm/assembly.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

#include "angular_gram.hpp"
#include "hysturm/angular.hpp"
#include "hysturm/linalg.hpp"

namespace hysturm {

namespace {

using Eigen::MatrixXd;

// radial kernel matrices keyed by (set, set', lambda, lambda', kernel)
struct RadialCache {
  const ChannelBasis& basis;
  std::map<std::tuple<int, int, int, int, int>, MatrixXd> cache;

  const MatrixXd& get(int sa, int pa, int sb, int pb, RadialKernel k) {
    const auto& ra = *basis.family(sa, pa).radial;
    const auto& rb = *basis.family(sb, pb).radial;
    const auto key = std::make_tuple(sa, sb, ra.lambda(), rb.lambda(),
                                     static_cast<int>(k));
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, radial_kernel_matrix_real(ra, rb, k))
        .first->second;
  }
};

}  // namespace

AssembledSystem assemble(const ChannelBasis& basis, double Z, int q_max,
                         bool include_ee) {
  if (q_max < 0) {
    q_max = 0;
    for (const auto& p : basis.pairs()) q_max = std::max(q_max, 2 * p.l2);
  }
  const int dim = basis.dim();
  if (dim > 20000)
    throw std::invalid_argument("assemble: basis dimension above the guard");

  AssembledSystem sys;
  sys.q_max = q_max;
  sys.H2 = MatrixXd::Zero(dim, dim);
  sys.H1 = MatrixXd::Zero(dim, dim);
  sys.S = MatrixXd::Zero(dim, dim);

  auto cc = detail::build_component_columns(basis);
  detail::GramCache grams(cc, cc, basis.quad());
  RadialCache radial{basis};

  const int L = basis.block().L;
  const int M = basis.block().M;
  const int nsets = static_cast<int>(basis.sets().size());
  const int npairs = static_cast<int>(basis.pairs().size());

  for (int sa = 0; sa < nsets; ++sa)
    for (int pa = 0; pa < npairs; ++pa)
      for (int sb = 0; sb < nsets; ++sb)
        for (int pb = 0; pb < npairs; ++pb) {
          const auto& fa = basis.family(sa, pa);
          const auto& fb = basis.family(sb, pb);
          const int na = fa.fam.count(), nra = fa.radial->count();
          const int nb = fb.fam.count(), nrb = fb.radial->count();
          const int row0 = basis.block_offset(sa, pa);
          const int col0 = basis.block_offset(sb, pb);

          MatrixXd Hang2 = MatrixXd::Zero(na, nb);  // pairs with Kin radial
          MatrixXd Cas = MatrixXd::Zero(na, nb);    // pairs with R^-2 radial
          MatrixXd Cmat = MatrixXd::Zero(na, nb);   // pairs with R^-1 radial
          MatrixXd Sang = MatrixXd::Zero(na, nb);
          bool any_diag = false;

          for (size_t ica = 0; ica < fa.components.size(); ++ica)
            for (size_t icb = 0; icb < fb.components.size(); ++icb) {
              const auto& A = fa.components[ica];
              const auto& B = fb.components[icb];
              const double w = A.weight * B.weight;
              const int ca0 = cc.start[sa][pa][ica];
              const int cb0 = cc.start[sb][pb][icb];

              if (A.la == B.la && A.lb == B.lb) {
                any_diag = true;
                const auto& ov = grams.vv(detail::kOne, [](double) { return 1.0; });
                const auto& dd = grams.dd(detail::kOne, [](double) { return 1.0; });
                const auto& cc2 = grams.vv(detail::kInvCos2, [](double a) {
                  const double c = std::cos(a);
                  return 1.0 / (c * c);
                });
                const auto& ss2 = grams.vv(detail::kInvSin2, [](double a) {
                  const double s = std::sin(a);
                  return 1.0 / (s * s);
                });
                const auto& nuc = grams.vv(detail::kInvCos, [](double a) {
                  return 1.0 / std::cos(a) + 1.0 / std::sin(a);
                });
                const auto ovb = ov.block(ca0, cb0, na, nb);
                Sang += w * ovb;
                Hang2 += w * ovb;  // multiplies the radial kinetic term
                Cas += w * (dd.block(ca0, cb0, na, nb) +
                            B.la * (B.la + 1.0) * cc2.block(ca0, cb0, na, nb) +
                            B.lb * (B.lb + 1.0) * ss2.block(ca0, cb0, na, nb) -
                            0.25 * ovb);
                Cmat += (-Z * w) * nuc.block(ca0, cb0, na, nb);
              }
              if (include_ee) {
                for (int q = 0; q <= q_max; ++q) {
                  const double gq = multipole_coupling({A.la, A.lb, L, M},
                                                       {B.la, B.lb, L, M}, q);
                  if (gq == 0.0) continue;
                  const auto& vq = grams.vv(detail::kVq0 + q, [q](double a) {
                    return v_q(q, a);
                  });
                  Cmat += (w * gq) * vq.block(ca0, cb0, na, nb);
                }
              }
            }

          const auto& r1 = radial.get(sa, pa, sb, pb, RadialKernel::InvR);
          for (int p = 0; p < na; ++p)
            for (int q = 0; q < nb; ++q) {
              if (Cmat(p, q) != 0.0)
                sys.H1.block(row0 + p * nra, col0 + q * nrb, nra, nrb)
                    .noalias() += Cmat(p, q) * r1;
            }
          if (any_diag) {
            const auto& kin = radial.get(sa, pa, sb, pb, RadialKernel::Kinetic);
            const auto& r2 = radial.get(sa, pa, sb, pb, RadialKernel::InvR2);
            const auto& o1 = radial.get(sa, pa, sb, pb, RadialKernel::One);
            for (int p = 0; p < na; ++p)
              for (int q = 0; q < nb; ++q) {
                auto h2 = sys.H2.block(row0 + p * nra, col0 + q * nrb, nra, nrb);
                if (Hang2(p, q) != 0.0) h2.noalias() += 0.5 * Hang2(p, q) * kin;
                if (Cas(p, q) != 0.0) h2.noalias() += 0.5 * Cas(p, q) * r2;
                if (Sang(p, q) != 0.0)
                  sys.S.block(row0 + p * nra, col0 + q * nrb, nra, nrb)
                      .noalias() += Sang(p, q) * o1;
              }
          }
        }

  // normalize to unit overlap diagonal
  sys.norms = sys.S.diagonal().cwiseSqrt();
  Eigen::VectorXd inv = sys.norms.cwiseInverse();
  sys.H2 = inv.asDiagonal() * sys.H2 * inv.asDiagonal();
  sys.H1 = inv.asDiagonal() * sys.H1 * inv.asDiagonal();
  sys.S = inv.asDiagonal() * sys.S * inv.asDiagonal();
  return sys;
}

PrunedSystem prune(const AssembledSystem& system, double threshold) {
  if (threshold <= 0.0) throw std::invalid_argument("prune: threshold <= 0");
  auto eig = linalg::sym_eig(system.S, true);
  const int dim = system.dim();
  const double cutoff = threshold * eig.values[dim - 1];
  int first = 0;
  while (first < dim && eig.values[first] <= cutoff) ++first;
  if (first == dim) throw std::runtime_error("prune: all directions discarded");

  const int kept = dim - first;
  PrunedSystem out;
  out.overlap_eigs = eig.values;
  out.discarded = first;
  out.threshold = threshold;
  out.W = eig.vectors.rightCols(kept) *
          eig.values.tail(kept).cwiseSqrt().cwiseInverse().asDiagonal();
  out.H2 = out.W.transpose() * system.H2 * out.W;
  out.H1 = out.W.transpose() * system.H1 * out.W;
  return out;
}

}  // namespace hysturm
