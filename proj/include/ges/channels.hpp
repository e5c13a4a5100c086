#ifndef GES_CHANNELS_HPP
#define GES_CHANNELS_HPP

#include <limits>
#include <vector>

#include "ges/restarts.hpp"
#include "ges/types.hpp"

namespace ges {

/// Completely positive trace-preserving map given by a Kraus family.
struct KrausChannel {
  int in_dim = 0;
  int out_dim = 0;
  std::vector<Matrix> kraus;  // each out_dim x in_dim

  /// Validates shapes and the trace-preserving sum.
  static KrausChannel make(int in_dim, int out_dim, std::vector<Matrix> ops);
  static KrausChannel raw(int in_dim, int out_dim, std::vector<Matrix> ops);

  int env_dim() const { return static_cast<int>(kraus.size()); }
};

/// Tall matrix V : H_in -> H_B (x) H_C with V^dag V = I. Row index runs over
/// the B basis (slow) and the C basis (fast).
struct Isometry {
  int in_dim = 0;
  std::pair<int, int> out_dims;  // (d_B, d_C)
  Matrix matrix;                 // (d_B * d_C) x in_dim

  static Isometry make(int in_dim, std::pair<int, int> out_dims, Matrix m);
};

DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho);

/// Environment basis slots are ordered by Kraus-operator list index.
Isometry isometry_from_kraus(const KrausChannel& ch);
KrausChannel channel_from_isometry(const Isometry& v);

/// Tr_C(V rho V^dag); agrees with apply_channel of the matching channel.
DensityMatrix stinespring_apply(const Isometry& v, const DensityMatrix& rho);

inline constexpr double kInfP = std::numeric_limits<double>::infinity();

/// Best Schatten-p norm of the channel output over pure inputs, found by
/// seeded projected-gradient ascent with random restarts (p = kInfP maximizes
/// the largest output eigenvalue). Monotone nondecreasing in `restarts`.
double max_output_norm(const KrausChannel& ch, double p, int restarts = 200,
                       uint64_t seed = 1, Exec exec = Exec::Parallel);

/// Per-operator check ||K_i^dag K_i||_op < 1 - 1e-12.
std::vector<bool> kraus_norm_condition(const KrausChannel& ch);
bool kraus_norm_condition_all(const KrausChannel& ch);

/// d(d-1)/2 operators (|i><j| - |j><i|)/sqrt(d-1), i < j; the action equals
/// (I - rho^T)/(d-1).
KrausChannel holevo_werner(int d);

}  // namespace ges

#endif
