#include "ges/measures.hpp"

#include <algorithm>
#include <cmath>

#include "ges/tensor.hpp"

namespace ges {

double concurrence_pure(const PureState& psi, const Bipartition& cut) {
  DensityMatrix rho = projector(psi);
  DensityMatrix ra = partial_trace(rho, cut.side_a);
  double purity = (ra.matrix * ra.matrix).trace().real();
  return std::sqrt(std::max(2.0 * (1.0 - purity), 0.0));
}

double negativity(const DensityMatrix& rho, const Bipartition& cut) {
  double n = 0.5 * (trace_norm(partial_transpose(rho, cut)) - 1.0);
  return std::max(n, 0.0);
}

double geometric_pure(const PureState& psi, const Bipartition& cut) {
  std::vector<double> s = schmidt_coefficients(psi, cut);
  double top = s.empty() ? 0.0 : s.front();
  return std::max(1.0 - top * top, 0.0);
}

double gme_pure(const PureState& psi, MeasureKind m) {
  double best = std::numeric_limits<double>::infinity();
  for (const Bipartition& cut : all_bipartitions(psi.dims.count())) {
    double v = 0.0;
    switch (m) {
      case MeasureKind::Concurrence: v = concurrence_pure(psi, cut); break;
      case MeasureKind::Negativity: v = negativity(projector(psi), cut); break;
      case MeasureKind::Geometric: v = geometric_pure(psi, cut); break;
    }
    best = std::min(best, v);
  }
  return best;
}

double overlap_with(const DensityMatrix& rho, const Subspace& w) {
  if (!(rho.dims == w.dims))
    throw std::invalid_argument("overlap_with: dims mismatch");
  return (rho.matrix * projector_onto(w)).trace().real();
}

namespace {

int bipartite_local_d(const Subspace& w, const char* who) {
  if (w.dims.count() != 2 || w.dims[0] != w.dims[1])
    throw std::invalid_argument(std::string(who) + ": subspace must live in a d x d space");
  return w.dims[0];
}

}  // namespace

double bipartite_concurrence_lb(const DensityMatrix& rho, const Subspace& w,
                                double lambda1_bar) {
  if (!(lambda1_bar > 0.0 && lambda1_bar < 1.0))
    throw std::invalid_argument("bipartite_concurrence_lb: lambda1_bar outside (0,1)");
  int d = bipartite_local_d(w, "bipartite_concurrence_lb");
  double t = overlap_with(rho, w);
  return std::max(std::sqrt(2.0 / (d * (d - 1.0))) * (t - lambda1_bar) / lambda1_bar, 0.0);
}

double bipartite_cren_lb(const DensityMatrix& rho, const Subspace& w,
                         double lambda1_bar) {
  if (!(lambda1_bar > 0.0 && lambda1_bar < 1.0))
    throw std::invalid_argument("bipartite_cren_lb: lambda1_bar outside (0,1)");
  bipartite_local_d(w, "bipartite_cren_lb");
  double t = overlap_with(rho, w);
  return std::max((t - lambda1_bar) / (2.0 * lambda1_bar), 0.0);
}

namespace {

int smaller_side(const Dims& dims, const Bipartition& cut) {
  auto [ra, cb] = cut_dims(dims, cut);
  return static_cast<int>(std::min(ra, cb));
}

BoundReport bounds_from(const DensityMatrix& rho, const Subspace& w, double g,
                        int d, bool d_explicit) {
  if (!(g > 0.0 && g < 1.0))
    throw std::invalid_argument("gme_bounds: g outside (0,1)");
  BoundReport r;
  r.overlap = overlap_with(rho, w);
  r.g_gme_used = g;
  r.d_used = d;
  r.d_explicit = d_explicit;
  double excess = std::max(r.overlap + g - 1.0, 0.0);
  r.concurrence_lb = std::sqrt(2.0 / (d * (d - 1.0))) * excess / (1.0 - g);
  r.negativity_lb = excess / (2.0 * (1.0 - g));
  r.robustness_white = white_noise_robustness(w, g);
  return r;
}

}  // namespace

BoundReport gme_bounds(const DensityMatrix& rho, const Subspace& w, double g,
                       std::optional<int> d_concurrence) {
  if (!(rho.dims == w.dims))
    throw std::invalid_argument("gme_bounds: dims mismatch");
  int d;
  bool explicit_d = d_concurrence.has_value();
  if (explicit_d) {
    d = *d_concurrence;
    if (d < 2) throw std::invalid_argument("gme_bounds: d must be >= 2");
  } else {
    // derive d only when every canonical cut agrees on its smaller side
    std::vector<Bipartition> cuts = all_bipartitions(w.dims.count());
    d = smaller_side(w.dims, cuts.front());
    for (const Bipartition& cut : cuts)
      if (smaller_side(w.dims, cut) != d)
        throw std::invalid_argument(
            "gme_bounds: cuts disagree on the local dimension; pass d explicitly");
  }
  return bounds_from(rho, w, g, d, explicit_d);
}

BoundReport gme_bounds_auto(const DensityMatrix& rho, const Subspace& w,
                            int restarts, uint64_t seed, Exec exec) {
  if (!(rho.dims == w.dims))
    throw std::invalid_argument("gme_bounds_auto: dims mismatch");
  SubspaceEntanglement se = subspace_entanglement(w, restarts, seed, exec);
  int d = smaller_side(w.dims, se.max_cut);
  return bounds_from(rho, w, se.g_gme, d, false);
}

double white_noise_robustness(const Subspace& w, double g) {
  if (!(g > 0.0 && g < 1.0))
    throw std::invalid_argument("white_noise_robustness: g outside (0,1)");
  long dh = w.dims.total();
  long dw = w.dimension();
  if (dw >= dh)
    throw std::invalid_argument("white_noise_robustness: subspace fills the space");
  double p = g * static_cast<double>(dh) / static_cast<double>(dh - dw);
  return std::min(p, 1.0);
}

double spectrum_robustness(const Subspace& w, double g,
                           const std::vector<double>& noise_spectrum) {
  if (!(g > 0.0 && g < 1.0))
    throw std::invalid_argument("spectrum_robustness: g outside (0,1)");
  long dh = w.dims.total();
  if (static_cast<long>(noise_spectrum.size()) != dh)
    throw std::invalid_argument("spectrum_robustness: spectrum length must equal dim(H)");
  double sum = 0.0;
  for (size_t i = 0; i < noise_spectrum.size(); ++i) {
    if (noise_spectrum[i] < -1e-12)
      throw std::invalid_argument("spectrum_robustness: negative eigenvalue");
    if (i > 0 && noise_spectrum[i] > noise_spectrum[i - 1] + 1e-12)
      throw std::invalid_argument("spectrum_robustness: spectrum must be sorted descending");
    sum += noise_spectrum[i];
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("spectrum_robustness: spectrum must sum to 1");
  long codim = dh - w.dimension();
  if (codim < 1)
    throw std::invalid_argument("spectrum_robustness: subspace fills the space");
  double kf = 0.0;
  for (long i = 0; i < codim; ++i) kf += noise_spectrum[static_cast<size_t>(i)];
  if (kf <= 0.0) return 1.0;
  return std::min(g / kf, 1.0);
}

}  // namespace ges
