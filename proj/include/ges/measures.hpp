#ifndef GES_MEASURES_HPP
#define GES_MEASURES_HPP

#include <optional>

#include "ges/certify.hpp"
#include "ges/constructions.hpp"

namespace ges {

/// sqrt(2 (1 - Tr rho_A^2)) for a normalized pure state.
double concurrence_pure(const PureState& psi, const Bipartition& cut);

/// (||rho^T_B||_1 - 1) / 2, never negative.
double negativity(const DensityMatrix& rho, const Bipartition& cut);

/// 1 - (largest Schmidt coefficient)^2.
double geometric_pure(const PureState& psi, const Bipartition& cut);

enum class MeasureKind { Concurrence, Negativity, Geometric };

/// Minimum of the bipartite measure over all canonical bipartitions.
double gme_pure(const PureState& psi, MeasureKind m);

/// Bipartite lower bounds from the overlap with a completely entangled
/// subspace W of a d (x) d space (lambda1_bar = sup Schmidt^2 over W).
double bipartite_concurrence_lb(const DensityMatrix& rho, const Subspace& w,
                                double lambda1_bar);
double bipartite_cren_lb(const DensityMatrix& rho, const Subspace& w,
                         double lambda1_bar);

/// Tr(rho Pi_W).
double overlap_with(const DensityMatrix& rho, const Subspace& w);

struct BoundReport {
  double overlap = 0.0;
  double g_gme_used = 0.0;
  double concurrence_lb = 0.0;
  double negativity_lb = 0.0;
  double robustness_white = 0.0;
  std::optional<double> robustness_spectrum;
  int d_used = 0;        // local dimension in the concurrence prefactor
  bool d_explicit = false;
};

/// GME lower bounds from the overlap with a genuinely entangled subspace
/// with geometric GME measure g. When d_concurrence is absent, the smaller
/// side must be the same for every canonical cut, otherwise the choice is
/// ambiguous and an explicit value is required.
BoundReport gme_bounds(const DensityMatrix& rho, const Subspace& w, double g,
                       std::optional<int> d_concurrence = {});

/// Convenience path that measures g (and the minimizing cut, hence d) with
/// the seesaw before evaluating the bounds.
BoundReport gme_bounds_auto(const DensityMatrix& rho, const Subspace& w,
                            int restarts = 200, uint64_t seed = 1,
                            Exec exec = Exec::Parallel);

/// Largest white-noise fraction below which support on W stays genuinely
/// entangled: g / (1 - dim(W)/dim(H)), capped at 1.
double white_noise_robustness(const Subspace& w, double g);

/// Spectrum-only variant: g / (sum of the codim(W) largest noise
/// eigenvalues), capped at 1. The spectrum must be sorted descending, have
/// length dim(H) and sum to 1.
double spectrum_robustness(const Subspace& w, double g,
                           const std::vector<double>& noise_spectrum);

}  // namespace ges

#endif
