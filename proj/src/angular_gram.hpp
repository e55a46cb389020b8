// Internal helper: flattened per-component sample matrices of a channel
// basis and Gram matrices against alpha kernels on the shared quadrature.
#pragma once

#include <Eigen/Dense>
#include <functional>
#include <map>
#include <vector>

#include "hysturm/channel_basis.hpp"

namespace hysturm::detail {

struct ComponentColumns {
  Eigen::MatrixXd values;  // nodes x total columns
  Eigen::MatrixXd derivs;
  // column start per (set, pair, component); all counts = fam.count()
  std::vector<std::vector<std::vector<int>>> start;
};

inline ComponentColumns build_component_columns(const ChannelBasis& basis) {
  ComponentColumns cc;
  const Eigen::Index nq = basis.quad().nodes.size();
  int total = 0;
  cc.start.resize(basis.sets().size());
  for (size_t is = 0; is < basis.sets().size(); ++is) {
    cc.start[is].resize(basis.pairs().size());
    for (size_t ip = 0; ip < basis.pairs().size(); ++ip) {
      const auto& pf = basis.family(is, ip);
      for (size_t ic = 0; ic < pf.components.size(); ++ic) {
        cc.start[is][ip].push_back(total);
        total += pf.fam.count();
      }
    }
  }
  cc.values.resize(nq, total);
  cc.derivs.resize(nq, total);
  for (size_t is = 0; is < basis.sets().size(); ++is)
    for (size_t ip = 0; ip < basis.pairs().size(); ++ip) {
      const auto& pf = basis.family(is, ip);
      for (size_t ic = 0; ic < pf.components.size(); ++ic) {
        const int c0 = cc.start[is][ip][ic];
        const int n = pf.fam.count();
        if (pf.components[ic].reflected) {
          cc.values.middleCols(c0, n) = pf.fam.values.colwise().reverse();
          cc.derivs.middleCols(c0, n) = -pf.fam.derivs.colwise().reverse();
        } else {
          cc.values.middleCols(c0, n) = pf.fam.values;
          cc.derivs.middleCols(c0, n) = pf.fam.derivs;
        }
      }
    }
  return cc;
}

/// Cached Gram matrices <col_i | k(alpha) | col_j> over the full column set.
class GramCache {
 public:
  GramCache(const ComponentColumns& ca, const ComponentColumns& cb,
            const QuadratureRule& quad)
      : ca_(ca), cb_(cb), quad_(quad) {}

  // value-value gram against the kernel (id is the cache key)
  const Eigen::MatrixXd& vv(int id, const std::function<double(double)>& k) {
    auto it = vv_.find(id);
    if (it != vv_.end()) return it->second;
    return vv_.emplace(id, gram(ca_.values, cb_.values, k)).first->second;
  }
  // deriv-deriv gram
  const Eigen::MatrixXd& dd(int id, const std::function<double(double)>& k) {
    auto it = dd_.find(id);
    if (it != dd_.end()) return it->second;
    return dd_.emplace(id, gram(ca_.derivs, cb_.derivs, k)).first->second;
  }
  // value-deriv gram (derivative acting on the ket)
  const Eigen::MatrixXd& vd(int id, const std::function<double(double)>& k) {
    auto it = vd_.find(id);
    if (it != vd_.end()) return it->second;
    return vd_.emplace(id, gram(ca_.values, cb_.derivs, k)).first->second;
  }

 private:
  Eigen::MatrixXd gram(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                       const std::function<double(double)>& k) const {
    Eigen::VectorXd d(quad_.nodes.size());
    for (Eigen::Index i = 0; i < d.size(); ++i)
      d[i] = quad_.weights[i] * k(quad_.nodes[i]);
    return a.transpose() * d.asDiagonal() * b;
  }

  const ComponentColumns& ca_;
  const ComponentColumns& cb_;
  const QuadratureRule& quad_;
  std::map<int, Eigen::MatrixXd> vv_, dd_, vd_;
};

// kernel cache ids
enum KernelId : int {
  kOne = 0,
  kInvCos2,
  kInvSin2,
  kInvCos,
  kInvSin,
  kCosA,
  kSinA,
  kCos2OverCos,
  kCos2OverSin,
  kVq0 = 100,  // kVq0 + q for the multipole factors
};

}  // namespace hysturm::detail
