#ifndef GES_TENSOR_HPP
#define GES_TENSOR_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ges/types.hpp"

namespace ges {

long flatten(const Dims& dims, const std::vector<int>& idx);
std::vector<int> unflatten(const Dims& dims, long flat);

/// Total dimensions of (side_a, complement) under a cut.
std::pair<long, long> cut_dims(const Dims& dims, const Bipartition& cut);

/// Reshape a state into the matrix whose rows run over the side_a basis and
/// whose columns run over the complement basis (both in increasing subsystem
/// order). vectorize() is its exact inverse on amplitudes.
Matrix matricize(const PureState& psi, const Bipartition& cut);
PureState vectorize(const Matrix& m, const Dims& dims, const Bipartition& cut);

/// Singular values of matricize(psi, cut), sorted descending.
std::vector<double> schmidt_coefficients(const PureState& psi,
                                         const Bipartition& cut);

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& keep);

/// Transpose of the complement-side indices (the B side of the cut).
Matrix partial_transpose(const DensityMatrix& rho, const Bipartition& cut);

double trace_norm(const Matrix& m);

/// Sum of the k largest eigenvalues of a Hermitian matrix.
double ky_fan_norm(const Matrix& hermitian, int k);

PureState apply_local_unitary(const PureState& psi, const Matrix& u,
                              int subsystem);

/// Replacement of one subsystem by a pair: an optional unitary on the source
/// subsystem followed by a bijective relabeling of its basis into pair labels.
struct FactorizationScheme {
  int subsystem = 0;
  std::pair<int, int> new_dims;
  std::vector<std::pair<int, int>> basis_map;  // source label -> (hi, lo)
  std::optional<Matrix> pre_unitary;

  /// Plain row-major split: k -> (k / d2, k % d2).
  static FactorizationScheme square_split(int subsystem, int d1, int d2);
};

PureState factorize_subsystem(const PureState& psi,
                              const FactorizationScheme& scheme);

}  // namespace ges

#endif
