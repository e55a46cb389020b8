#pragma once

#include <memory>
#include <vector>

#include "hysturm/bspline.hpp"
#include "hysturm/hyperangular.hpp"
#include "hysturm/radial.hpp"

namespace hysturm {

/// Conserved quantum numbers of one symmetry block. Parity is fixed by the
/// first (l1, l2) pair; all pairs must agree with it.
struct SymmetryBlock {
  int L = 0;
  int M = 0;
  int S_spin = 0;  // total spin, 0 or 1
};

struct PairLL {
  int l1 = 0;
  int l2 = 0;
};

/// One (kappa, calZ) family of basis functions with its per-pair counts.
struct SetSpec {
  double kappa = 1.0;
  double calZ = 1.0;
  int n_radial = 5;
  int n_angular = 5;
};

enum class AngularBackend { Sturmian, Jacobi };

struct BasisOptions {
  int spline_order = 7;
  MeshSpec mesh{};
  int quad_nodes = 0;  // per interval; 0 picks order + 6
  AngularBackend backend = AngularBackend::Sturmian;
  bool include_v0 = true;
  int lambda_override = -1;  // -1: lambda = l1 + l2 per pair
};

/// Exchange-symmetrized channel basis: tau = {set, pair, p, n} ordered by
/// set, then pair, then p, then n. Each tau owns one or two angular
/// components (direct and reflected) sharing the radial function S_{n,lambda}.
class ChannelBasis {
 public:
  ChannelBasis(const SymmetryBlock& block, std::vector<PairLL> pairs,
               std::vector<SetSpec> sets, const BasisOptions& opts);

  struct Component {
    double weight;   // 1, or the 1/sqrt(2) exchange coefficients
    int la, lb;      // bipolar labels (la, lb) of Y^{LM}_{la,lb}
    bool reflected;  // use mirror-image samples H(pi/2 - alpha)
  };

  struct PairFamily {
    AngularFamily fam;                   // admissible functions only
    std::shared_ptr<RadialSet> radial;   // lambda matched to the pair
    std::vector<Component> components;   // one (l1 == l2) or two entries
  };

  struct Entry {
    int set, pair, p, n;  // n: offset within the radial set
  };

  const SymmetryBlock& block() const { return block_; }
  const std::vector<PairLL>& pairs() const { return pairs_; }
  const std::vector<SetSpec>& sets() const { return sets_; }
  const BsplineBasis& spline() const { return *spline_; }
  const QuadratureRule& quad() const { return quad_; }
  const BasisOptions& options() const { return opts_; }

  int dim() const { return static_cast<int>(entries_.size()); }
  const std::vector<Entry>& entries() const { return entries_; }
  const PairFamily& family(int set, int pair) const {
    return families_[set][pair];
  }
  /// First basis index of the contiguous (set, pair) block.
  int block_offset(int set, int pair) const { return offsets_[set][pair]; }
  int parity() const { return parity_; }

  /// Short channel label, e.g. "s0:(1,2)", for reports.
  std::string channel_label(int set, int pair) const;

 private:
  SymmetryBlock block_;
  std::vector<PairLL> pairs_;
  std::vector<SetSpec> sets_;
  BasisOptions opts_;
  int parity_ = 1;
  std::shared_ptr<BsplineBasis> spline_;
  QuadratureRule quad_;
  std::vector<std::vector<PairFamily>> families_;
  std::vector<std::vector<int>> offsets_;
  std::vector<Entry> entries_;
};

}  // namespace hysturm
