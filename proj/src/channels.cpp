#include "ges/channels.hpp"

#include <cmath>

#include "ges/tensor.hpp"

namespace ges {

namespace {

void check_shapes(int in_dim, int out_dim, const std::vector<Matrix>& ops) {
  if (in_dim < 1 || out_dim < 1)
    throw std::invalid_argument("KrausChannel: dimensions must be positive");
  if (ops.empty()) throw std::invalid_argument("KrausChannel: empty Kraus list");
  if (static_cast<long>(ops.size()) > static_cast<long>(in_dim) * out_dim)
    throw std::invalid_argument("KrausChannel: too many Kraus operators");
  for (const Matrix& k : ops)
    if (k.rows() != out_dim || k.cols() != in_dim)
      throw std::invalid_argument("KrausChannel: operator shape mismatch");
}

Matrix kraus_gram(const std::vector<Matrix>& ops, int in_dim) {
  Matrix g = Matrix::Zero(in_dim, in_dim);
  for (const Matrix& k : ops) g += k.adjoint() * k;
  return g;
}

}  // namespace

KrausChannel KrausChannel::make(int in_dim, int out_dim, std::vector<Matrix> ops) {
  check_shapes(in_dim, out_dim, ops);
  Matrix g = kraus_gram(ops, in_dim);
  if (!approx_equal(g, Matrix::Identity(in_dim, in_dim), tolerances().structural))
    throw std::invalid_argument("KrausChannel: trace-preserving sum violated");
  return KrausChannel{in_dim, out_dim, std::move(ops)};
}

KrausChannel KrausChannel::raw(int in_dim, int out_dim, std::vector<Matrix> ops) {
  check_shapes(in_dim, out_dim, ops);
  return KrausChannel{in_dim, out_dim, std::move(ops)};
}

Isometry Isometry::make(int in_dim, std::pair<int, int> out_dims, Matrix m) {
  if (m.rows() != static_cast<long>(out_dims.first) * out_dims.second ||
      m.cols() != in_dim)
    throw std::invalid_argument("Isometry: matrix shape mismatch");
  if (!approx_equal(m.adjoint() * m, Matrix::Identity(in_dim, in_dim),
                    tolerances().structural))
    throw std::invalid_argument("Isometry: V^dag V != I");
  return Isometry{in_dim, out_dims, std::move(m)};
}

DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho) {
  if (rho.matrix.rows() != ch.in_dim)
    throw std::invalid_argument("apply_channel: dimension mismatch");
  Matrix out = Matrix::Zero(ch.out_dim, ch.out_dim);
  for (const Matrix& k : ch.kraus) out += k * rho.matrix * k.adjoint();
  return DensityMatrix::raw(Dims({ch.out_dim}), std::move(out));
}

Isometry isometry_from_kraus(const KrausChannel& ch) {
  Matrix g = kraus_gram(ch.kraus, ch.in_dim);
  if (!approx_equal(g, Matrix::Identity(ch.in_dim, ch.in_dim),
                    tolerances().structural))
    throw std::invalid_argument("isometry_from_kraus: channel is not trace preserving");
  int n = ch.env_dim();
  Matrix v = Matrix::Zero(static_cast<long>(ch.out_dim) * n, ch.in_dim);
  for (int i = 0; i < n; ++i)
    for (int b = 0; b < ch.out_dim; ++b)
      v.row(static_cast<long>(b) * n + i) = ch.kraus[i].row(b);
  return Isometry{ch.in_dim, {ch.out_dim, n}, std::move(v)};
}

KrausChannel channel_from_isometry(const Isometry& v) {
  if (!approx_equal(v.matrix.adjoint() * v.matrix,
                    Matrix::Identity(v.in_dim, v.in_dim), tolerances().structural))
    throw std::invalid_argument("channel_from_isometry: input is not an isometry");
  auto [db, dc] = v.out_dims;
  std::vector<Matrix> ops;
  ops.reserve(dc);
  for (int i = 0; i < dc; ++i) {
    Matrix k(db, v.in_dim);
    for (int b = 0; b < db; ++b) k.row(b) = v.matrix.row(static_cast<long>(b) * dc + i);
    ops.push_back(std::move(k));
  }
  return KrausChannel{v.in_dim, db, std::move(ops)};
}

DensityMatrix stinespring_apply(const Isometry& v, const DensityMatrix& rho) {
  if (rho.matrix.rows() != v.in_dim)
    throw std::invalid_argument("stinespring_apply: dimension mismatch");
  Matrix big = v.matrix * rho.matrix * v.matrix.adjoint();
  auto [db, dc] = v.out_dims;
  if (dc == 1)  // trivial environment
    return DensityMatrix::raw(Dims({db}), std::move(big));
  DensityMatrix joint = DensityMatrix::raw(Dims({db, dc}), std::move(big));
  return partial_trace(joint, {0});
}

namespace {

// rho_out and its spectrum for a pure input
struct Output {
  Matrix rho;
  Eigen::SelfAdjointEigenSolver<Matrix> es;
  Output(const KrausChannel& ch, const Vector& psi) {
    rho = Matrix::Zero(ch.out_dim, ch.out_dim);
    for (const Matrix& k : ch.kraus) {
      Vector y = k * psi;
      rho += y * y.adjoint();
    }
    es.compute(rho);
  }
};

double p_norm(const Eigen::VectorXd& ev, double p) {
  if (std::isinf(p)) return ev.maxCoeff();
  double s = 0;
  for (long i = 0; i < ev.size(); ++i) s += std::pow(std::max(ev[i], 0.0), p);
  return std::pow(s, 1.0 / p);
}

// Euclidean gradient (Wirtinger, up to a positive factor) of the ascent
// objective at psi: Phi^dag(rho^(p-1)) psi, or Phi^dag(v v^dag) psi at p=inf.
Vector ascent_gradient(const KrausChannel& ch, const Vector& psi,
                       const Output& out, double p) {
  Matrix w;
  if (std::isinf(p)) {
    Vector v = out.es.eigenvectors().col(ch.out_dim - 1);
    w = v * v.adjoint();
  } else {
    const auto& ev = out.es.eigenvalues();
    Eigen::VectorXd powed(ev.size());
    for (long i = 0; i < ev.size(); ++i)
      powed[i] = std::pow(std::max(ev[i], 0.0), p - 1.0);
    w = out.es.eigenvectors() * powed.asDiagonal() *
        out.es.eigenvectors().adjoint();
  }
  Matrix lifted = Matrix::Zero(ch.in_dim, ch.in_dim);
  for (const Matrix& k : ch.kraus) lifted += k.adjoint() * w * k;
  return lifted * psi;
}

double ascend_from(const KrausChannel& ch, double p, uint64_t seed) {
  Vector psi = random_unit_vector(ch.in_dim, seed);
  double f = p_norm(Output(ch, psi).es.eigenvalues(), p);
  double step = 0.5;
  for (int it = 0; it < 500 && step > 1e-14; ++it) {
    Output out(ch, psi);
    Vector g = ascent_gradient(ch, psi, out, p);
    Vector cand = psi + step * g;
    double n = cand.norm();
    if (n == 0.0) break;
    cand /= n;
    double fc = p_norm(Output(ch, cand).es.eigenvalues(), p);
    if (fc > f + 1e-15) {
      psi = std::move(cand);
      f = fc;
      step *= 1.5;
    } else {
      step *= 0.5;
    }
  }
  return f;
}

}  // namespace

double max_output_norm(const KrausChannel& ch, double p, int restarts,
                       uint64_t seed, Exec exec) {
  if (!(p > 1.0)) throw std::invalid_argument("max_output_norm: requires p > 1");
  if (restarts < 1) throw std::invalid_argument("max_output_norm: restarts < 1");
  BestRestart best = best_over_restarts(restarts, exec, [&](int i) {
    return ascend_from(ch, p, derive_seed(seed, static_cast<uint64_t>(i)));
  });
  return best.value;
}

std::vector<bool> kraus_norm_condition(const KrausChannel& ch) {
  std::vector<bool> ok;
  ok.reserve(ch.kraus.size());
  for (const Matrix& k : ch.kraus) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(k.adjoint() * k, Eigen::EigenvaluesOnly);
    ok.push_back(es.eigenvalues().maxCoeff() < 1.0 - 1e-12);
  }
  return ok;
}

bool kraus_norm_condition_all(const KrausChannel& ch) {
  for (bool b : kraus_norm_condition(ch))
    if (!b) return false;
  return true;
}

KrausChannel holevo_werner(int d) {
  if (d < 2) throw std::invalid_argument("holevo_werner: requires d >= 2");
  std::vector<Matrix> ops;
  double c = 1.0 / std::sqrt(static_cast<double>(d - 1));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Matrix k = Matrix::Zero(d, d);
      k(i, j) = c;
      k(j, i) = -c;
      ops.push_back(std::move(k));
    }
  return KrausChannel::make(d, d, std::move(ops));
}

}  // namespace ges
