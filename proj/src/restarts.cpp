#include "ges/restarts.hpp"

#include <cmath>

namespace ges {

uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t derive_seed(uint64_t seed, uint64_t stream) {
  uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
  return splitmix64(s);
}

double Rng::uniform() {
  // top 53 bits -> [0, 1)
  return static_cast<double>(splitmix64(state_) >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  double u1 = uniform(), u2 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double t = 2.0 * M_PI * u2;
  cached_ = r * std::sin(t);
  has_cached_ = true;
  return r * std::cos(t);
}

Vector random_unit_vector(int dim, uint64_t seed) {
  Rng rng(seed);
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = rng.cnormal();
  double n = v.norm();
  while (n == 0.0) {  // astronomically unlikely
    for (int i = 0; i < dim; ++i) v[i] = rng.cnormal();
    n = v.norm();
  }
  return v / n;
}

}  // namespace ges
