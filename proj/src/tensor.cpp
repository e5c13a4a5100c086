#include "ges/tensor.hpp"

#include <algorithm>
#include <cmath>

namespace ges {

long flatten(const Dims& dims, const std::vector<int>& idx) {
  if (static_cast<int>(idx.size()) != dims.count())
    throw std::invalid_argument("flatten: index arity mismatch");
  long flat = 0;
  for (int s = 0; s < dims.count(); ++s) {
    if (idx[s] < 0 || idx[s] >= dims[s])
      throw std::invalid_argument("flatten: index out of range");
    flat = flat * dims[s] + idx[s];
  }
  return flat;
}

std::vector<int> unflatten(const Dims& dims, long flat) {
  std::vector<int> idx(dims.count());
  for (int s = dims.count() - 1; s >= 0; --s) {
    idx[s] = static_cast<int>(flat % dims[s]);
    flat /= dims[s];
  }
  return idx;
}

namespace {

void check_cut(const Dims& dims, const Bipartition& cut) {
  if (cut.side_a.empty() || cut.side_a.front() != 0)
    throw std::invalid_argument("bipartition not canonical (must contain 0)");
  for (int s : cut.side_a)
    if (s < 0 || s >= dims.count())
      throw std::invalid_argument("bipartition index out of range");
  if (static_cast<int>(cut.side_a.size()) == dims.count())
    throw std::invalid_argument("bipartition must be a proper subset");
}

// Row/column index of each flat tensor index under a cut, in increasing
// subsystem order on both sides.
struct CutIndexer {
  long rows = 1, cols = 1;
  std::vector<long> row_of, col_of;

  CutIndexer(const Dims& dims, const Bipartition& cut) {
    check_cut(dims, cut);
    std::vector<int> b = cut.complement(dims.count());
    std::vector<bool> in_a(dims.count(), false);
    for (int s : cut.side_a) in_a[s] = true;
    for (int s : cut.side_a) rows *= dims[s];
    for (int s : b) cols *= dims[s];
    long total = dims.total();
    row_of.resize(total);
    col_of.resize(total);
    for (long f = 0; f < total; ++f) {
      std::vector<int> idx = unflatten(dims, f);
      long r = 0, c = 0;
      for (int s = 0; s < dims.count(); ++s) {
        if (in_a[s])
          r = r * dims[s] + idx[s];
        else
          c = c * dims[s] + idx[s];
      }
      row_of[f] = r;
      col_of[f] = c;
    }
  }
};

}  // namespace

std::pair<long, long> cut_dims(const Dims& dims, const Bipartition& cut) {
  CutIndexer ix(dims, cut);
  return {ix.rows, ix.cols};
}

Matrix matricize(const PureState& psi, const Bipartition& cut) {
  CutIndexer ix(psi.dims, cut);
  Matrix m = Matrix::Zero(ix.rows, ix.cols);
  for (long f = 0; f < psi.dims.total(); ++f)
    m(ix.row_of[f], ix.col_of[f]) = psi.amplitudes[f];
  return m;
}

PureState vectorize(const Matrix& m, const Dims& dims, const Bipartition& cut) {
  CutIndexer ix(dims, cut);
  if (m.rows() != ix.rows || m.cols() != ix.cols)
    throw std::invalid_argument("vectorize: matrix shape does not match cut");
  Vector amps(dims.total());
  for (long f = 0; f < dims.total(); ++f)
    amps[f] = m(ix.row_of[f], ix.col_of[f]);
  return PureState::raw(dims, std::move(amps));
}

std::vector<double> schmidt_coefficients(const PureState& psi,
                                         const Bipartition& cut) {
  Matrix m = matricize(psi, cut);
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  return std::vector<double>(sv.data(), sv.data() + sv.size());
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& keep) {
  const Dims& dims = rho.dims;
  std::vector<int> k = keep;
  std::sort(k.begin(), k.end());
  if (k.empty() || std::unique(k.begin(), k.end()) != k.end() ||
      static_cast<int>(k.size()) == dims.count())
    throw std::invalid_argument("partial_trace: keep must be a proper nonempty subset");
  for (int s : k)
    if (s < 0 || s >= dims.count())
      throw std::invalid_argument("partial_trace: keep index out of range");

  std::vector<bool> kept(dims.count(), false);
  for (int s : k) kept[s] = true;
  std::vector<int> kept_dims, traced;
  for (int s = 0; s < dims.count(); ++s)
    (kept[s] ? kept_dims.push_back(dims[s]) : traced.push_back(s));

  long dk = 1;
  for (int d : kept_dims) dk *= d;
  long dt = dims.total() / dk;

  // flat index from (kept part, traced part)
  std::vector<long> full_of(static_cast<size_t>(dk) * dt);
  for (long f = 0; f < dims.total(); ++f) {
    std::vector<int> idx = unflatten(dims, f);
    long ik = 0, it = 0;
    for (int s = 0; s < dims.count(); ++s) {
      if (kept[s])
        ik = ik * dims[s] + idx[s];
      else
        it = it * dims[s] + idx[s];
    }
    full_of[static_cast<size_t>(ik) * dt + it] = f;
  }

  Matrix out = Matrix::Zero(dk, dk);
  for (long i = 0; i < dk; ++i)
    for (long j = 0; j < dk; ++j) {
      Complex sum = 0;
      for (long t = 0; t < dt; ++t)
        sum += rho.matrix(full_of[static_cast<size_t>(i) * dt + t],
                          full_of[static_cast<size_t>(j) * dt + t]);
      out(i, j) = sum;
    }
  return DensityMatrix::raw(Dims(kept_dims), std::move(out));
}

Matrix partial_transpose(const DensityMatrix& rho, const Bipartition& cut) {
  CutIndexer ix(rho.dims, cut);
  long total = rho.dims.total();
  // flat index from (row part, col part)
  std::vector<long> full_of(static_cast<size_t>(ix.rows) * ix.cols);
  for (long f = 0; f < total; ++f)
    full_of[static_cast<size_t>(ix.row_of[f]) * ix.cols + ix.col_of[f]] = f;

  Matrix out(total, total);
  for (long r = 0; r < total; ++r)
    for (long c = 0; c < total; ++c) {
      long rt = full_of[static_cast<size_t>(ix.row_of[r]) * ix.cols + ix.col_of[c]];
      long ct = full_of[static_cast<size_t>(ix.row_of[c]) * ix.cols + ix.col_of[r]];
      out(rt, ct) = rho.matrix(r, c);
    }
  return out;
}

double trace_norm(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().sum();
}

double ky_fan_norm(const Matrix& h, int k) {
  if (h.rows() != h.cols())
    throw std::invalid_argument("ky_fan_norm: matrix not square");
  if ((h - h.adjoint()).cwiseAbs().maxCoeff() > tolerances().structural)
    throw std::invalid_argument("ky_fan_norm: matrix not Hermitian");
  if (k < 1 || k > h.rows())
    throw std::invalid_argument("ky_fan_norm: k out of range");
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();  // ascending
  double sum = 0;
  for (int i = 0; i < k; ++i) sum += ev[ev.size() - 1 - i];
  return sum;
}

PureState apply_local_unitary(const PureState& psi, const Matrix& u,
                              int subsystem) {
  const Dims& dims = psi.dims;
  if (subsystem < 0 || subsystem >= dims.count())
    throw std::invalid_argument("apply_local_unitary: subsystem out of range");
  int d = dims[subsystem];
  if (u.rows() != d || u.cols() != d)
    throw std::invalid_argument("apply_local_unitary: dimension mismatch");
  if (!approx_equal(u.adjoint() * u, Matrix::Identity(d, d), tolerances().structural))
    throw std::invalid_argument("apply_local_unitary: matrix not unitary");

  long inner = 1, outer = 1;
  for (int s = subsystem + 1; s < dims.count(); ++s) inner *= dims[s];
  for (int s = 0; s < subsystem; ++s) outer *= dims[s];

  Vector out(dims.total());
  Vector slice(d), mixed(d);
  for (long o = 0; o < outer; ++o)
    for (long in = 0; in < inner; ++in) {
      for (int x = 0; x < d; ++x) slice[x] = psi.amplitudes[(o * d + x) * inner + in];
      mixed = u * slice;
      for (int x = 0; x < d; ++x) out[(o * d + x) * inner + in] = mixed[x];
    }
  return PureState::raw(psi.dims, std::move(out));
}

FactorizationScheme FactorizationScheme::square_split(int subsystem, int d1,
                                                      int d2) {
  FactorizationScheme s;
  s.subsystem = subsystem;
  s.new_dims = {d1, d2};
  s.basis_map.reserve(static_cast<size_t>(d1) * d2);
  for (int k = 0; k < d1 * d2; ++k) s.basis_map.emplace_back(k / d2, k % d2);
  return s;
}

PureState factorize_subsystem(const PureState& psi,
                              const FactorizationScheme& scheme) {
  const Dims& dims = psi.dims;
  int s = scheme.subsystem;
  if (s < 0 || s >= dims.count())
    throw std::invalid_argument("factorize_subsystem: subsystem out of range");
  int d = dims[s];
  auto [d1, d2] = scheme.new_dims;
  if (d1 * d2 != d || static_cast<int>(scheme.basis_map.size()) != d)
    throw std::invalid_argument("factorize_subsystem: scheme inconsistent with dims");
  std::vector<bool> hit(d, false);
  for (auto [a, b] : scheme.basis_map) {
    if (a < 0 || a >= d1 || b < 0 || b >= d2)
      throw std::invalid_argument("factorize_subsystem: basis_map label out of range");
    int m = a * d2 + b;
    if (hit[m]) throw std::invalid_argument("factorize_subsystem: basis_map not a bijection");
    hit[m] = true;
  }

  PureState cur = psi;
  if (scheme.pre_unitary) cur = apply_local_unitary(cur, *scheme.pre_unitary, s);

  // relabel the s axis: label k moves to a*d2 + b
  long inner = 1, outer = 1;
  for (int t = s + 1; t < dims.count(); ++t) inner *= dims[t];
  for (int t = 0; t < s; ++t) outer *= dims[t];
  Vector out(dims.total());
  for (long o = 0; o < outer; ++o)
    for (int k = 0; k < d; ++k) {
      long m = static_cast<long>(scheme.basis_map[k].first) * d2 +
               scheme.basis_map[k].second;
      for (long in = 0; in < inner; ++in)
        out[(o * d + m) * inner + in] = cur.amplitudes[(o * d + k) * inner + in];
    }

  std::vector<int> nd = dims.locals;
  nd[s] = d1;
  nd.insert(nd.begin() + s + 1, d2);
  return PureState::raw(Dims(std::move(nd)), std::move(out));
}

}  // namespace ges
