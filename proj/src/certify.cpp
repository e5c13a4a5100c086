#include "ges/certify.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "ges/tensor.hpp"

namespace ges {

std::string to_string(CertMode m) {
  switch (m) {
    case CertMode::Exact: return "exact";
    case CertMode::Numeric: return "numeric";
    default: return "both";
  }
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Entangled: return "entangled";
    case Verdict::ProductFound: return "product_found";
    default: return "inconclusive";
  }
}

// ---- exact route --------------------------------------------------------------

namespace {

Polynomial linear_combination_entry(const std::vector<ExactMat>& mats, size_t r,
                                    size_t c, const MonomialOrder& order) {
  int k = static_cast<int>(mats.size());
  Polynomial p(k, order);
  for (int mu = 0; mu < k; ++mu) {
    const GRat& a = mats[static_cast<size_t>(mu)][r][c];
    if (!a.is_zero()) {
      Exponents e(static_cast<size_t>(k), 0);
      e[static_cast<size_t>(mu)] = 1;
      p.add_term(e, a);
    }
  }
  return p;
}

// all 2x2 minors of a matrix whose entries are (linear) polynomials,
// deduplicated up to monic scaling
std::vector<Polynomial> two_by_two_minors(
    const std::vector<std::vector<Polynomial>>& m) {
  size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<Polynomial> out;
  for (size_t r1 = 0; r1 < rows; ++r1)
    for (size_t r2 = r1 + 1; r2 < rows; ++r2)
      for (size_t c1 = 0; c1 < cols; ++c1)
        for (size_t c2 = c1 + 1; c2 < cols; ++c2) {
          Polynomial minor = m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1];
          if (minor.is_zero()) continue;
          minor = minor.monic();
          if (std::find(out.begin(), out.end(), minor) == out.end())
            out.push_back(std::move(minor));
        }
  return out;
}

std::vector<Polynomial> minors_of_pencil(const std::vector<ExactMat>& mats) {
  size_t rows = mats[0].size(), cols = mats[0][0].size();
  MonomialOrder order{};
  std::vector<std::vector<Polynomial>> entries(
      rows, std::vector<Polynomial>(cols, Polynomial::zero(static_cast<int>(mats.size()), order)));
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c)
      entries[r][c] = linear_combination_entry(mats, r, c, order);
  return two_by_two_minors(entries);
}

bool exact_matrix_rank_le_one(const ExactMat& m) {
  for (size_t r1 = 0; r1 < m.size(); ++r1)
    for (size_t r2 = r1 + 1; r2 < m.size(); ++r2)
      for (size_t c1 = 0; c1 < m[0].size(); ++c1)
        for (size_t c2 = c1 + 1; c2 < m[0].size(); ++c2)
          if (!(m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]).is_zero())
            return false;
  return true;
}

}  // namespace

std::vector<Polynomial> minor_system(const ExactSubspace& w,
                                     const Bipartition& cut) {
  std::vector<ExactMat> mats;
  mats.reserve(w.basis.size());
  for (const ExactVec& v : w.basis)
    mats.push_back(exact_matricize(v, w.dims, cut));
  return minors_of_pencil(mats);
}

Certificate certify_ces_exact(const ExactSubspace& w, const Bipartition& cut,
                              const CertifyOptions& opts) {
  Certificate cert;
  cert.cut = cut;
  cert.mode = CertMode::Exact;
  cert.span_sibling = true;

  // cheap pre-check: a basis vector that is itself a product state is a witness
  for (size_t mu = 0; mu < w.basis.size(); ++mu) {
    if (exact_matrix_rank_le_one(exact_matricize(w.basis[mu], w.dims, cut))) {
      cert.verdict = Verdict::ProductFound;
      cert.groebner = "basis vector " + std::to_string(mu) + " is a product across the cut";
      cert.witness = to_pure_state(w.basis[mu], w.dims);
      return cert;
    }
  }

  std::vector<Polynomial> sys = minor_system(w, cut);
  if (sys.empty()) {
    // rank <= 1 for every combination: any basis vector is a witness
    cert.verdict = Verdict::ProductFound;
    cert.groebner = "minor system vanishes identically";
    cert.witness = to_pure_state(w.basis[0], w.dims);
    return cert;
  }

  int nvars = sys[0].nvars();
  try {
    for (int k = 0; k < nvars; ++k) {
      std::vector<Polynomial> chart;
      chart.reserve(sys.size());
      for (const Polynomial& p : sys) chart.push_back(p.substitute_one(k));
      if (!is_trivial_basis(buchberger(std::move(chart), opts.groebner))) {
        cert.verdict = Verdict::ProductFound;
        cert.groebner = "nontrivial solutions on chart b" + std::to_string(k + 1) + " = 1";
        return cert;
      }
    }
    cert.verdict = Verdict::Entangled;
    cert.groebner = "{1} on all charts";
  } catch (const GroebnerLimitError&) {
    cert.verdict = Verdict::Inconclusive;
    cert.groebner = "S-pair reduction cap exceeded";
  }
  return cert;
}

bool purity_certificate_exact(const ExactKraus& ch, const GroebnerOptions& opts) {
  if (ch.kraus.size() < 2)
    return false;  // a single operator maps some input to a single direction
  // columns K_i |phi| as a matrix of linear polynomials in the input components
  size_t rows = static_cast<size_t>(ch.out_dim), cols = ch.kraus.size();
  MonomialOrder order{};
  int nvars = ch.in_dim;
  std::vector<std::vector<Polynomial>> m(
      rows, std::vector<Polynomial>(cols, Polynomial::zero(nvars, order)));
  for (size_t c = 0; c < cols; ++c) {
    const ExactMat& k = ch.kraus[c];
    for (size_t r = 0; r < rows; ++r) {
      Polynomial p(nvars, order);
      for (int a = 0; a < ch.in_dim; ++a) {
        if (k[r][static_cast<size_t>(a)].is_zero()) continue;
        Exponents e(static_cast<size_t>(nvars), 0);
        e[static_cast<size_t>(a)] = 1;
        p.add_term(e, k[r][static_cast<size_t>(a)]);
      }
      m[r][c] = std::move(p);
    }
  }
  std::vector<Polynomial> sys = two_by_two_minors(m);
  if (sys.empty()) return false;
  return only_trivial_root(sys, opts);
}

// ---- numeric route --------------------------------------------------------------

double seesaw_run(const std::vector<Matrix>& mats, uint64_t seed, int max_sweeps,
                  double tol, Vector* a_out, Vector* b_out,
                  std::vector<double>* sweep_values) {
  long rows = mats[0].rows(), cols = mats[0].cols();
  Vector a = random_unit_vector(static_cast<int>(rows), seed);
  Vector b;
  double value = 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    // best b for fixed a: top eigenvector of sum conj(u_i) u_i^T, u_i = A_i^dag a
    Matrix hb = Matrix::Zero(cols, cols);
    for (const Matrix& m : mats) {
      Vector u = m.adjoint() * a;
      hb += u.conjugate() * u.transpose();
    }
    es.compute(hb);
    b = es.eigenvectors().col(cols - 1);
    // best a for fixed b: top eigenvector of sum (A_i b*)(A_i b*)^dag
    Matrix ha = Matrix::Zero(rows, rows);
    for (const Matrix& m : mats) {
      Vector w = m * b.conjugate();
      ha += w * w.adjoint();
    }
    es.compute(ha);
    a = es.eigenvectors().col(rows - 1);
    double next = es.eigenvalues()(rows - 1);
    if (sweep_values) sweep_values->push_back(next);
    if (sweep > 0 && next - value < tol) {
      value = std::max(value, next);
      break;
    }
    value = next;
  }
  if (a_out) *a_out = a;
  if (b_out) *b_out = b;
  return value;
}

namespace {

PureState product_witness(const Dims& dims, const Bipartition& cut,
                          const Vector& a, const Vector& b) {
  Matrix outer = a * b.transpose();  // amplitudes of a (x) b across the cut
  return vectorize(outer, dims, cut);
}

}  // namespace

OverlapResult max_product_overlap(const Subspace& w, const Bipartition& cut,
                                  int restarts, uint64_t seed, Exec exec) {
  if (restarts < 1) throw std::invalid_argument("max_product_overlap: restarts < 1");
  std::vector<Matrix> mats;
  mats.reserve(w.basis.size());
  for (const PureState& psi : w.basis) mats.push_back(matricize(psi, cut));

  constexpr int kMaxSweeps = 600;
  constexpr double kTol = 1e-14;
  BestRestart best = best_over_restarts(restarts, exec, [&](int i) {
    return seesaw_run(mats, derive_seed(seed, static_cast<uint64_t>(i)), kMaxSweeps, kTol);
  });

  Vector a, b;
  double lambda1 = seesaw_run(mats, derive_seed(seed, static_cast<uint64_t>(best.index)),
                              kMaxSweeps, kTol, &a, &b);
  OverlapResult out{std::min(lambda1, 1.0), product_witness(w.dims, cut, a, b)};
  return out;
}

namespace {

Certificate numeric_certificate(const Subspace& w, const Bipartition& cut,
                                const CertifyOptions& opts) {
  OverlapResult r = max_product_overlap(w, cut, opts.restarts, opts.seed, opts.exec);
  Certificate cert;
  cert.cut = cut;
  cert.mode = CertMode::Numeric;
  cert.lambda1 = r.lambda1;
  cert.restarts = opts.restarts;
  if (1.0 - r.lambda1 >= opts.entangled_gap) {
    cert.verdict = Verdict::Entangled;
  } else if (r.lambda1 > 1.0 - opts.product_residual) {
    cert.verdict = Verdict::ProductFound;
    cert.witness = r.witness;
  } else {
    cert.verdict = Verdict::Inconclusive;
  }
  return cert;
}

}  // namespace

std::vector<Certificate> certify_ges(const Subspace& w, const CertifyOptions& opts) {
  if (w.dims.count() < 3)
    throw std::invalid_argument("certify_ges: need at least 3 parties");
  std::vector<Certificate> certs;
  for (const Bipartition& cut : all_bipartitions(w.dims.count()))
    certs.push_back(numeric_certificate(w, cut, opts));
  return certs;
}

std::vector<Certificate> certify_ges_exact(const ExactSubspace& w,
                                           const CertifyOptions& opts) {
  if (w.dims.count() < 3)
    throw std::invalid_argument("certify_ges_exact: need at least 3 parties");
  std::vector<Certificate> certs;
  for (const Bipartition& cut : all_bipartitions(w.dims.count()))
    certs.push_back(certify_ces_exact(w, cut, opts));
  return certs;
}

std::vector<Certificate> certify_ges_both(const Subspace& w,
                                          const ExactSubspace& sibling,
                                          const CertifyOptions& opts) {
  if (!(w.dims == sibling.dims))
    throw std::invalid_argument("certify_ges_both: dims mismatch");
  std::vector<Certificate> certs;
  for (const Bipartition& cut : all_bipartitions(w.dims.count())) {
    Certificate num = numeric_certificate(w, cut, opts);
    Certificate ex = certify_ces_exact(sibling, cut, opts);
    Certificate merged;
    merged.cut = cut;
    merged.mode = CertMode::Both;
    merged.lambda1 = num.lambda1;
    merged.restarts = num.restarts;
    merged.groebner = ex.groebner;
    merged.span_sibling = true;
    if (ex.verdict != Verdict::Inconclusive) {
      merged.verdict = ex.verdict;
      merged.witness = ex.witness ? ex.witness : num.witness;
    } else {
      merged.verdict = num.verdict;
      merged.witness = num.witness;
    }
    certs.push_back(std::move(merged));
  }
  return certs;
}

bool all_entangled(const std::vector<Certificate>& certs) {
  for (const Certificate& c : certs)
    if (c.verdict != Verdict::Entangled) return false;
  return !certs.empty();
}

SubspaceEntanglement subspace_entanglement(const Subspace& w, int restarts,
                                           uint64_t seed, Exec exec) {
  SubspaceEntanglement out;
  double max_l = 0.0;
  for (const Bipartition& cut : all_bipartitions(w.dims.count())) {
    double l = max_product_overlap(w, cut, restarts, seed, exec).lambda1;
    out.per_cut_lambda1.emplace_back(cut, l);
    if (l > max_l) {
      max_l = l;
      out.max_cut = cut;
    }
  }
  out.g_gme = 1.0 - max_l;
  return out;
}

}  // namespace ges
