#ifndef GES_EXACT_HPP
#define GES_EXACT_HPP

#include <vector>

#include "ges/rational.hpp"
#include "ges/types.hpp"

namespace ges {

using ExactVec = std::vector<GRat>;
using ExactMat = std::vector<std::vector<GRat>>;  // row-major

/// Subspace with exact Gaussian-rational amplitudes. Basis vectors must be
/// pairwise orthogonal but may be unnormalized (rationalized siblings scale
/// per column, which leaves the span untouched).
struct ExactSubspace {
  Dims dims;
  std::vector<ExactVec> basis;

  static ExactSubspace make(Dims dims, std::vector<ExactVec> basis);
  int dimension() const { return static_cast<int>(basis.size()); }
};

/// Kraus family with exact entries. Trace preservation is not enforced:
/// rationalized siblings rescale columns and only the range matters.
struct ExactKraus {
  int in_dim = 0;
  int out_dim = 0;
  std::vector<ExactMat> kraus;
};

GRat exact_inner(const ExactVec& a, const ExactVec& b);  // <a|b>
ExactMat exact_matricize(const ExactVec& amps, const Dims& dims,
                         const Bipartition& cut);
ExactVec exact_apply_local(const ExactVec& amps, const Dims& dims,
                           int subsystem, const ExactMat& m);

/// Relabel-split of one subsystem: d -> (d1, d2) via a bijective basis map.
ExactVec exact_relabel_split(const ExactVec& amps, const Dims& dims,
                             int subsystem, std::pair<int, int> new_dims,
                             const std::vector<std::pair<int, int>>& basis_map);

ExactMat exact_identity(int n);
ExactMat exact_mul(const ExactMat& a, const ExactMat& b);

/// Normalized floating-point view of one exact column.
PureState to_pure_state(const ExactVec& amps, const Dims& dims);

}  // namespace ges

#endif
