#include "ges/types.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace ges {

Tolerances& tolerances() {
  static Tolerances t;
  return t;
}

namespace {
constexpr long kMaxTotalDim = 1L << 17;
}

Dims::Dims(std::vector<int> l) : locals(std::move(l)) {
  if (locals.empty()) throw std::invalid_argument("Dims: empty dimension list");
  long prod = 1;
  for (int d : locals) {
    if (d < 2) throw std::invalid_argument("Dims: every local dimension must be >= 2");
    prod *= d;
    if (prod > kMaxTotalDim)
      throw std::invalid_argument("Dims: total dimension too large");
  }
}

long Dims::total() const {
  long prod = 1;
  for (int d : locals) prod *= d;
  return prod;
}

Bipartition Bipartition::canonical(std::vector<int> side, int n_subsystems) {
  std::set<int> s(side.begin(), side.end());
  if (s.size() != side.size())
    throw std::invalid_argument("Bipartition: repeated subsystem index");
  for (int i : s)
    if (i < 0 || i >= n_subsystems)
      throw std::invalid_argument("Bipartition: index out of range");
  if (s.empty() || static_cast<int>(s.size()) == n_subsystems)
    throw std::invalid_argument("Bipartition: side must be a proper nonempty subset");
  if (!s.count(0)) {
    // flip to the complement so that 0 is always on side A
    std::set<int> c;
    for (int i = 0; i < n_subsystems; ++i)
      if (!s.count(i)) c.insert(i);
    s = std::move(c);
  }
  Bipartition b;
  b.side_a.assign(s.begin(), s.end());
  return b;
}

std::vector<int> Bipartition::complement(int n_subsystems) const {
  std::vector<int> out;
  size_t k = 0;
  for (int i = 0; i < n_subsystems; ++i) {
    if (k < side_a.size() && side_a[k] == i) {
      ++k;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

std::string Bipartition::str() const {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < side_a.size(); ++i) os << (i ? "," : "") << side_a[i];
  os << "}";
  return os.str();
}

std::vector<Bipartition> all_bipartitions(int n) {
  if (n < 2) throw std::invalid_argument("all_bipartitions: need >= 2 subsystems");
  std::vector<Bipartition> cuts;
  // masks over subsystems 1..n-1 joined to subsystem 0; skip the full set
  for (unsigned mask = 0; mask + 1 < (1u << (n - 1)); ++mask) {
    Bipartition b;
    b.side_a.push_back(0);
    for (int i = 1; i < n; ++i)
      if (mask & (1u << (i - 1))) b.side_a.push_back(i);
    cuts.push_back(std::move(b));
  }
  std::sort(cuts.begin(), cuts.end(), [](const Bipartition& x, const Bipartition& y) {
    if (x.side_a.size() != y.side_a.size()) return x.side_a.size() < y.side_a.size();
    return x.side_a < y.side_a;
  });
  return cuts;
}

PureState PureState::make(Dims dims, Vector amps) {
  if (amps.size() != dims.total())
    throw std::invalid_argument("PureState: amplitude count does not match dims");
  double n = amps.norm();
  if (std::abs(n - 1.0) > tolerances().structural)
    throw std::invalid_argument("PureState: not normalized (norm = " + std::to_string(n) + ")");
  return PureState{std::move(dims), std::move(amps)};
}

PureState PureState::raw(Dims dims, Vector amps) {
  if (amps.size() != dims.total())
    throw std::invalid_argument("PureState: amplitude count does not match dims");
  return PureState{std::move(dims), std::move(amps)};
}

DensityMatrix DensityMatrix::make(Dims dims, Matrix m) {
  long d = dims.total();
  if (m.rows() != d || m.cols() != d)
    throw std::invalid_argument("DensityMatrix: matrix side does not match dims");
  double tol = tolerances().structural;
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > tol)
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  if (std::abs(m.trace().real() - 1.0) > tol || std::abs(m.trace().imag()) > tol)
    throw std::invalid_argument("DensityMatrix: trace != 1");
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol)
    throw std::invalid_argument("DensityMatrix: negative eigenvalue");
  return DensityMatrix{std::move(dims), std::move(m)};
}

DensityMatrix DensityMatrix::raw(Dims dims, Matrix m) {
  long d = dims.total();
  if (m.rows() != d || m.cols() != d)
    throw std::invalid_argument("DensityMatrix: matrix side does not match dims");
  return DensityMatrix{std::move(dims), std::move(m)};
}

DensityMatrix projector(const PureState& psi) {
  return DensityMatrix::raw(psi.dims, psi.amplitudes * psi.amplitudes.adjoint());
}

bool approx_equal(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return (a - b).cwiseAbs().maxCoeff() <= tol;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace ges
