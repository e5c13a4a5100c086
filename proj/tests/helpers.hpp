#ifndef GES_TEST_HELPERS_HPP
#define GES_TEST_HELPERS_HPP

#include <vector>

#include "ges/constructions.hpp"
#include "ges/restarts.hpp"
#include "ges/tensor.hpp"
#include "ges/types.hpp"

namespace ges::test {

inline PureState state_of(const Dims& dims,
                          const std::vector<std::pair<Complex, std::vector<int>>>& terms) {
  Vector v = Vector::Zero(dims.total());
  for (const auto& [c, idx] : terms) v[flatten(dims, idx)] += c;
  return PureState::raw(dims, std::move(v));
}

inline PureState bell() {
  double r = std::sqrt(0.5);
  return state_of(Dims({2, 2}), {{r, {0, 0}}, {r, {1, 1}}});
}

inline PureState ghz3() {
  double r = std::sqrt(0.5);
  return state_of(Dims({2, 2, 2}), {{r, {0, 0, 0}}, {r, {1, 1, 1}}});
}

inline Bipartition cut_of(std::vector<int> side, int n) {
  return Bipartition::canonical(std::move(side), n);
}

// random mixed state: normalized G G^dag from seeded complex normals
inline DensityMatrix random_density(const Dims& dims, uint64_t seed, int rank = 0) {
  long d = dims.total();
  if (rank <= 0) rank = static_cast<int>(d);
  Rng rng(seed);
  Matrix g(d, rank);
  for (long i = 0; i < d; ++i)
    for (int j = 0; j < rank; ++j) g(i, j) = rng.cnormal();
  Matrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix::raw(dims, std::move(m));
}

// random state supported on the span of a subspace basis
inline PureState random_in_span(const Subspace& w, uint64_t seed) {
  Vector c = random_unit_vector(w.dimension(), seed);
  Vector amps = Vector::Zero(w.dims.total());
  for (int i = 0; i < w.dimension(); ++i) amps += c[i] * w.basis[i].amplitudes;
  return PureState::raw(w.dims, amps / amps.norm());
}

inline DensityMatrix random_density_in_span(const Subspace& w, uint64_t seed,
                                            int terms = 3) {
  long d = w.dims.total();
  Matrix m = Matrix::Zero(d, d);
  Rng rng(seed);
  for (int t = 0; t < terms; ++t) {
    PureState psi = random_in_span(w, derive_seed(seed, static_cast<uint64_t>(t)));
    m += (0.1 + rng.uniform()) * (psi.amplitudes * psi.amplitudes.adjoint());
  }
  m /= m.trace().real();
  return DensityMatrix::raw(w.dims, std::move(m));
}

inline Matrix random_unitary(int d, uint64_t seed) {
  Rng rng(seed);
  Matrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = rng.cnormal();
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) {
    Complex ph = r(i, i) / std::abs(r(i, i));
    q.col(i) *= ph;
  }
  return q;
}

}  // namespace ges::test

#endif
