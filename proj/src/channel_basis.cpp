#include "hysturm/channel_basis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hysturm {

ChannelBasis::ChannelBasis(const SymmetryBlock& block, std::vector<PairLL> pairs,
                           std::vector<SetSpec> sets, const BasisOptions& opts)
    : block_(block), pairs_(std::move(pairs)), sets_(std::move(sets)),
      opts_(opts) {
  if (block_.L < 0 || std::abs(block_.M) > block_.L)
    throw std::invalid_argument("ChannelBasis: invalid (L, M)");
  if (block_.S_spin != 0 && block_.S_spin != 1)
    throw std::invalid_argument("ChannelBasis: spin must be 0 or 1");
  if (pairs_.empty()) throw std::invalid_argument("ChannelBasis: no pairs");
  if (sets_.empty()) throw std::invalid_argument("ChannelBasis: no sets");

  parity_ = (pairs_[0].l1 + pairs_[0].l2) % 2 == 0 ? 1 : -1;
  for (const auto& p : pairs_) {
    if (p.l1 < 0 || p.l2 < 0 || p.l1 > p.l2)
      throw std::invalid_argument(
          "ChannelBasis: pairs must be canonical with 0 <= l1 <= l2");
    if (block_.L < p.l2 - p.l1 || block_.L > p.l1 + p.l2)
      throw std::invalid_argument("ChannelBasis: pair incompatible with L");
    if (((p.l1 + p.l2) % 2 == 0 ? 1 : -1) != parity_)
      throw std::invalid_argument("ChannelBasis: pairs of mixed parity");
  }

  const int nodes = opts_.quad_nodes > 0 ? opts_.quad_nodes
                                         : opts_.spline_order + 6;
  spline_ = std::make_shared<BsplineBasis>(opts_.spline_order, opts_.mesh);
  quad_ = spline_->quadrature(nodes);

  families_.resize(sets_.size());
  offsets_.assign(sets_.size(), std::vector<int>(pairs_.size(), 0));
  int offset = 0;
  for (size_t is = 0; is < sets_.size(); ++is) {
    const SetSpec& set = sets_[is];
    for (size_t ip = 0; ip < pairs_.size(); ++ip) {
      const auto [l1, l2] = pairs_[ip];
      const int lambda =
          opts_.lambda_override >= 0 ? opts_.lambda_override : l1 + l2;
      PairFamily pf;

      if (l1 == l2) {
        // admissible parity about pi/4 fixed by spin and exchange phase
        const int want =
            ((block_.S_spin + l1 + l2 + block_.L) % 2 == 0) ? 1 : -1;
        const int overshoot = 2 * set.n_angular + 6;
        AngularFamily all =
            opts_.backend == AngularBackend::Sturmian
                ? solve_hyperangular(l1, l2, lambda,
                                     {set.calZ, opts_.include_v0}, *spline_,
                                     quad_, std::min(overshoot, spline_->size()))
                : jacobi_family(l1, l2, quad_, overshoot);
        AngularFamily sel;
        sel.l1 = l1;
        sel.l2 = l2;
        sel.lambda = lambda;
        std::vector<int> idx;
        for (int p = 0; p < all.count() &&
                        static_cast<int>(idx.size()) < set.n_angular; ++p)
          if (all.parity[p] == want) idx.push_back(p);
        if (static_cast<int>(idx.size()) < set.n_angular)
          throw std::runtime_error(
              "ChannelBasis: not enough admissible angular functions");
        const int n = static_cast<int>(idx.size());
        sel.values.resize(all.values.rows(), n);
        sel.derivs.resize(all.derivs.rows(), n);
        if (all.rho.size() > 0) sel.rho.resize(n);
        if (all.coeffs.size() > 0) sel.coeffs.resize(all.coeffs.rows(), n);
        sel.parity.resize(n);
        for (int j = 0; j < n; ++j) {
          sel.values.col(j) = all.values.col(idx[j]);
          sel.derivs.col(j) = all.derivs.col(idx[j]);
          if (all.rho.size() > 0) sel.rho[j] = all.rho[idx[j]];
          if (all.coeffs.size() > 0) sel.coeffs.col(j) = all.coeffs.col(idx[j]);
          sel.parity[j] = all.parity[idx[j]];
        }
        pf.fam = std::move(sel);
        pf.components = {{1.0, l1, l2, false}};
      } else {
        pf.fam = opts_.backend == AngularBackend::Sturmian
                     ? solve_hyperangular(l1, l2, lambda,
                                          {set.calZ, opts_.include_v0},
                                          *spline_, quad_, set.n_angular)
                     : jacobi_family(l1, l2, quad_, set.n_angular);
        const double norm = 1.0 / std::sqrt(2.0);
        const int g = (block_.S_spin + l1 + l2 - block_.L) % 2;
        const double ex = (g % 2 == 0) ? norm : -norm;
        pf.components = {{norm, l1, l2, false}, {ex, l2, l1, true}};
      }
      pf.radial = std::make_shared<RadialSet>(set.kappa, lambda, set.n_radial);
      offsets_[is][ip] = offset;
      for (int p = 0; p < set.n_angular; ++p)
        for (int n = 0; n < set.n_radial; ++n)
          entries_.push_back({static_cast<int>(is), static_cast<int>(ip), p, n});
      offset += set.n_angular * set.n_radial;
      families_[is].push_back(std::move(pf));
    }
  }
}

std::string ChannelBasis::channel_label(int set, int pair) const {
  return "s" + std::to_string(set) + ":(" + std::to_string(pairs_[pair].l1) +
         "," + std::to_string(pairs_[pair].l2) + ")";
}

}  // namespace hysturm
