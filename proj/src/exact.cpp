#include "ges/exact.hpp"

#include <cmath>

#include "ges/tensor.hpp"

namespace ges {

ExactSubspace ExactSubspace::make(Dims dims, std::vector<ExactVec> basis) {
  long total = dims.total();
  if (basis.empty()) throw std::invalid_argument("ExactSubspace: empty basis");
  for (const ExactVec& v : basis)
    if (static_cast<long>(v.size()) != total)
      throw std::invalid_argument("ExactSubspace: amplitude count mismatch");
  for (size_t i = 0; i < basis.size(); ++i) {
    if (exact_inner(basis[i], basis[i]).is_zero())
      throw std::invalid_argument("ExactSubspace: zero basis vector");
    for (size_t j = i + 1; j < basis.size(); ++j)
      if (!exact_inner(basis[i], basis[j]).is_zero())
        throw std::invalid_argument("ExactSubspace: basis not orthogonal");
  }
  return ExactSubspace{std::move(dims), std::move(basis)};
}

GRat exact_inner(const ExactVec& a, const ExactVec& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("exact_inner: length mismatch");
  GRat sum;
  for (size_t i = 0; i < a.size(); ++i) sum = sum + a[i].conj() * b[i];
  return sum;
}

ExactMat exact_matricize(const ExactVec& amps, const Dims& dims,
                         const Bipartition& cut) {
  if (static_cast<long>(amps.size()) != dims.total())
    throw std::invalid_argument("exact_matricize: amplitude count mismatch");
  auto [rows, cols] = cut_dims(dims, cut);
  ExactMat m(rows, ExactVec(cols));
  std::vector<bool> in_a(dims.count(), false);
  for (int s : cut.side_a) in_a[s] = true;
  for (long f = 0; f < dims.total(); ++f) {
    std::vector<int> idx = unflatten(dims, f);
    long r = 0, c = 0;
    for (int s = 0; s < dims.count(); ++s) {
      if (in_a[s])
        r = r * dims[s] + idx[s];
      else
        c = c * dims[s] + idx[s];
    }
    m[r][c] = amps[f];
  }
  return m;
}

ExactVec exact_apply_local(const ExactVec& amps, const Dims& dims,
                           int subsystem, const ExactMat& m) {
  int d = dims[subsystem];
  if (static_cast<int>(m.size()) != d)
    throw std::invalid_argument("exact_apply_local: matrix side mismatch");
  for (const ExactVec& row : m)
    if (static_cast<int>(row.size()) != d)
      throw std::invalid_argument("exact_apply_local: matrix not square");
  long inner = 1, outer = 1;
  for (int s = subsystem + 1; s < dims.count(); ++s) inner *= dims[s];
  for (int s = 0; s < subsystem; ++s) outer *= dims[s];
  ExactVec out(amps.size());
  for (long o = 0; o < outer; ++o)
    for (long in = 0; in < inner; ++in)
      for (int r = 0; r < d; ++r) {
        GRat sum;
        for (int c = 0; c < d; ++c)
          sum = sum + m[r][c] * amps[(o * d + c) * inner + in];
        out[(o * d + r) * inner + in] = sum;
      }
  return out;
}

ExactVec exact_relabel_split(const ExactVec& amps, const Dims& dims,
                             int subsystem, std::pair<int, int> new_dims,
                             const std::vector<std::pair<int, int>>& basis_map) {
  int d = dims[subsystem];
  auto [d1, d2] = new_dims;
  if (d1 * d2 != d || static_cast<int>(basis_map.size()) != d)
    throw std::invalid_argument("exact_relabel_split: scheme inconsistent");
  long inner = 1, outer = 1;
  for (int s = subsystem + 1; s < dims.count(); ++s) inner *= dims[s];
  for (int s = 0; s < subsystem; ++s) outer *= dims[s];
  ExactVec out(amps.size());
  for (long o = 0; o < outer; ++o)
    for (int k = 0; k < d; ++k) {
      long m = static_cast<long>(basis_map[k].first) * d2 + basis_map[k].second;
      for (long in = 0; in < inner; ++in)
        out[(o * d + m) * inner + in] = amps[(o * d + k) * inner + in];
    }
  return out;
}

ExactMat exact_identity(int n) {
  ExactMat m(n, ExactVec(n));
  for (int i = 0; i < n; ++i) m[i][i] = GRat::integer(1);
  return m;
}

ExactMat exact_mul(const ExactMat& a, const ExactMat& b) {
  size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  ExactMat out(n, ExactVec(p));
  for (size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw std::invalid_argument("exact_mul: shape mismatch");
    for (size_t j = 0; j < p; ++j) {
      GRat sum;
      for (size_t t = 0; t < k; ++t) sum = sum + a[i][t] * b[t][j];
      out[i][j] = sum;
    }
  }
  return out;
}

PureState to_pure_state(const ExactVec& amps, const Dims& dims) {
  Vector v(amps.size());
  for (size_t i = 0; i < amps.size(); ++i)
    v[static_cast<long>(i)] = Complex(amps[i].real_d(), amps[i].imag_d());
  double n = v.norm();
  if (n == 0.0) throw std::invalid_argument("to_pure_state: zero vector");
  return PureState::raw(dims, v / n);
}

}  // namespace ges
