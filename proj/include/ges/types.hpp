#ifndef GES_TYPES_HPP
#define GES_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace ges {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Structural checks (unitarity, orthonormality, trace) use `structural`;
// SVD/eigenvalue-based identities use the looser `spectral`.
struct Tolerances {
  double structural = 1e-9;
  double spectral = 1e-8;
};

Tolerances& tolerances();

/// Ordered list of local Hilbert-space dimensions. Subsystem 0 is the
/// slowest-varying index of every flat amplitude array.
struct Dims {
  std::vector<int> locals;

  Dims() = default;
  explicit Dims(std::vector<int> l);

  int count() const { return static_cast<int>(locals.size()); }
  int operator[](int i) const { return locals.at(static_cast<size_t>(i)); }
  long total() const;

  bool operator==(const Dims&) const = default;
};

/// Proper nonempty subset of subsystem indices, canonicalized so that it
/// contains index 0 (A|~A and ~A|A collapse to one object).
struct Bipartition {
  std::vector<int> side_a;  // sorted ascending

  static Bipartition canonical(std::vector<int> side, int n_subsystems);
  std::vector<int> complement(int n_subsystems) const;
  std::string str() const;

  bool operator==(const Bipartition&) const = default;
};

/// All canonical bipartitions of n subsystems, ordered by |side_a| then
/// lexicographically. There are 2^(n-1) - 1 of them.
std::vector<Bipartition> all_bipartitions(int n_subsystems);

struct PureState {
  Dims dims;
  Vector amplitudes;

  /// Checks unit norm against the structural tolerance.
  static PureState make(Dims dims, Vector amps);
  /// Unnormalized variant, for use inside construction routines only.
  static PureState raw(Dims dims, Vector amps);

  double norm() const { return amplitudes.norm(); }
};

struct DensityMatrix {
  Dims dims;
  Matrix matrix;

  /// Checks hermiticity, unit trace and positive semidefiniteness.
  static DensityMatrix make(Dims dims, Matrix m);
  static DensityMatrix raw(Dims dims, Matrix m);
};

DensityMatrix projector(const PureState& psi);

bool approx_equal(const Matrix& a, const Matrix& b, double tol);
Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace ges

#endif
