#ifndef GES_CERTIFY_HPP
#define GES_CERTIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "ges/constructions.hpp"
#include "ges/groebner.hpp"

namespace ges {

enum class CertMode { Exact, Numeric, Both };
enum class Verdict { Entangled, ProductFound, Inconclusive };

std::string to_string(CertMode m);
std::string to_string(Verdict v);

/// Per-bipartition verdict with its evidence. An exact verdict of Entangled
/// is only ever set when the minor system has no nontrivial complex root; a
/// numeric Entangled requires 1 - lambda1 >= the configured gap.
struct Certificate {
  Bipartition cut;
  CertMode mode = CertMode::Numeric;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<double> lambda1;
  int restarts = 0;
  std::string groebner;  // e.g. "{1} on all charts"
  std::optional<PureState> witness;
  bool span_sibling = false;
};

struct CertifyOptions {
  int restarts = 200;
  uint64_t seed = 1;
  double entangled_gap = 1e-6;      // declare entangled when 1 - lambda1 >= gap
  double product_residual = 1e-10;  // product_found only when lambda1 > 1 - this
  GroebnerOptions groebner{};
  Exec exec = Exec::Parallel;
};

/// All 2x2 minors of sum_mu beta_mu a^(mu), a^(mu) = matricize(basis_mu, cut):
/// homogeneous quadratics in beta_1..beta_k over the Gaussian rationals.
std::vector<Polynomial> minor_system(const ExactSubspace& w,
                                     const Bipartition& cut);

Certificate certify_ces_exact(const ExactSubspace& w, const Bipartition& cut,
                              const CertifyOptions& opts = {});

struct OverlapResult {
  double lambda1 = 0.0;
  PureState witness;  // best product state found
};

/// Seesaw maximization of ||Pi_W (a (x) b)||^2 over product states across the
/// cut: each half-step replaces one side by the leading eigenvector of the
/// operator induced by the other, so the objective never decreases within a
/// run. Deterministic under a fixed seed; best over restarts.
OverlapResult max_product_overlap(const Subspace& w, const Bipartition& cut,
                                  int restarts = 200, uint64_t seed = 1,
                                  Exec exec = Exec::Parallel);

/// Single seesaw run from one random start; exposed for the monotonicity
/// property tests. `mats` are the matricized basis vectors.
double seesaw_run(const std::vector<Matrix>& mats, uint64_t seed,
                  int max_sweeps, double tol, Vector* a_out = nullptr,
                  Vector* b_out = nullptr,
                  std::vector<double>* sweep_values = nullptr);

/// One certificate per canonical bipartition (n >= 3 parties).
std::vector<Certificate> certify_ges(const Subspace& w,
                                     const CertifyOptions& opts = {});
std::vector<Certificate> certify_ges_exact(const ExactSubspace& w,
                                           const CertifyOptions& opts = {});
/// Runs both routes; exact evidence wins where it is decisive. The exact
/// side runs on the rationalized sibling, so certificates carry the
/// span-sibling flag.
std::vector<Certificate> certify_ges_both(const Subspace& w,
                                          const ExactSubspace& sibling,
                                          const CertifyOptions& opts = {});

bool all_entangled(const std::vector<Certificate>& certs);

struct SubspaceEntanglement {
  std::vector<std::pair<Bipartition, double>> per_cut_lambda1;
  double g_gme = 0.0;    // 1 - max over cuts
  Bipartition max_cut;   // cut attaining the largest lambda1
};

SubspaceEntanglement subspace_entanglement(const Subspace& w,
                                           int restarts = 200,
                                           uint64_t seed = 1,
                                           Exec exec = Exec::Parallel);

/// Exact test that for every nonzero input some pair of Kraus images is
/// linearly independent (columns-of-a-matrix minor system).
bool purity_certificate_exact(const ExactKraus& ch,
                              const GroebnerOptions& opts = {});

}  // namespace ges

#endif
