#ifndef GES_RESTARTS_HPP
#define GES_RESTARTS_HPP

#include <cstdint>
#include <limits>

#include "ges/types.hpp"

namespace ges {

enum class Exec { Serial, Parallel };

uint64_t splitmix64(uint64_t& state);

/// Independent stream seed for restart `stream` of a run seeded by `seed`.
uint64_t derive_seed(uint64_t seed, uint64_t stream);

// Deterministic generator (splitmix64 + Box-Muller). Self-contained so
// results do not depend on the standard library's distribution internals.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  double uniform();  // [0, 1)
  double normal();
  Complex cnormal() { return {normal(), normal()}; }

 private:
  uint64_t state_;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

/// Haar-ish random unit vector: i.i.d. complex normals, normalized.
Vector random_unit_vector(int dim, uint64_t seed);

struct BestRestart {
  double value = -std::numeric_limits<double>::infinity();
  int index = -1;
};

/// Runs eval(0..restarts-1), each a pure function of its index, and keeps the
/// largest value (smallest index on ties). The parallel path gives results
/// bit-identical to the serial one.
template <class Fn>
BestRestart best_over_restarts(int restarts, Exec exec, Fn&& eval) {
  BestRestart best;
  auto better = [](double v, int i, const BestRestart& b) {
    return v > b.value || (v == b.value && (b.index < 0 || i < b.index));
  };
  if (exec == Exec::Serial) {
    for (int i = 0; i < restarts; ++i) {
      double v = eval(i);
      if (better(v, i, best)) best = {v, i};
    }
    return best;
  }
#pragma omp parallel
  {
    BestRestart local;
#pragma omp for nowait schedule(dynamic)
    for (int i = 0; i < restarts; ++i) {
      double v = eval(i);
      if (better(v, i, local)) local = {v, i};
    }
#pragma omp critical(ges_best_restart)
    {
      if (local.index >= 0 && better(local.value, local.index, best))
        best = local;
    }
  }
  return best;
}

}  // namespace ges

#endif
