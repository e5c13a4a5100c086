#include "ges/constructions.hpp"

#include <cmath>
#include <sstream>

namespace ges {

namespace {

void check_open_unit(double l, const char* who) {
  if (!(l > 0.0 && l < 1.0))
    throw std::invalid_argument(std::string(who) + ": parameter must lie in (0,1)");
}

void check_ratio(const RatioPair& r, const char* who) {
  if (r.first <= 0 || r.second <= 0)
    throw std::invalid_argument(std::string(who) + ": ratios must be positive integers");
}

PureState from_terms(const Dims& dims,
                     const std::vector<std::pair<Complex, std::vector<int>>>& terms) {
  Vector v = Vector::Zero(dims.total());
  for (const auto& [c, idx] : terms) v[flatten(dims, idx)] += c;
  return PureState::raw(dims, std::move(v));
}

ExactVec exact_from_terms(const Dims& dims,
                          const std::vector<std::pair<GRat, std::vector<int>>>& terms) {
  ExactVec v(dims.total());
  for (const auto& [c, idx] : terms)
    v[flatten(dims, idx)] = v[flatten(dims, idx)] + c;
  return v;
}

}  // namespace

Subspace Subspace::make(Dims dims, std::vector<PureState> basis,
                        std::vector<std::string> provenance) {
  if (basis.empty()) throw std::invalid_argument("Subspace: empty basis");
  double tol = tolerances().structural;
  for (const PureState& b : basis) {
    if (!(b.dims == dims))
      throw std::invalid_argument("Subspace: basis states disagree on dims");
    if (std::abs(b.norm() - 1.0) > tol)
      throw std::invalid_argument("Subspace: basis state not normalized");
  }
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j)
      if (std::abs(basis[i].amplitudes.dot(basis[j].amplitudes)) > tol)
        throw std::invalid_argument("Subspace: basis not orthogonal");
  if (!provenance.empty() && provenance.size() != basis.size())
    throw std::invalid_argument("Subspace: provenance count mismatch");
  return Subspace{std::move(dims), std::move(basis), std::move(provenance)};
}

Matrix gram(const Subspace& w) {
  int k = w.dimension();
  Matrix g(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      g(i, j) = w.basis[i].amplitudes.dot(w.basis[j].amplitudes);
  return g;
}

Matrix projector_onto(const Subspace& w) {
  long d = w.dims.total();
  Matrix p = Matrix::Zero(d, d);
  for (const PureState& b : w.basis) p += b.amplitudes * b.amplitudes.adjoint();
  return p;
}

Subspace to_subspace(const ExactSubspace& w) {
  std::vector<PureState> basis;
  basis.reserve(w.basis.size());
  for (const ExactVec& v : w.basis) basis.push_back(to_pure_state(v, w.dims));
  return Subspace::make(w.dims, std::move(basis));
}

int max_ces_dim(int d1, int d2) {
  if (d1 < 2 || d2 < 2) throw std::invalid_argument("max_ces_dim: dimensions must be >= 2");
  return d1 * d2 - (d1 + d2) + 1;
}

int max_ges_dim(const Dims& dims) {
  int best = -1;
  for (const Bipartition& cut : all_bipartitions(dims.count())) {
    auto [ra, cb] = cut_dims(dims, cut);
    int v = max_ces_dim(static_cast<int>(ra), static_cast<int>(cb));
    best = (best < 0) ? v : std::min(best, v);
  }
  return best;
}

// ---- bipartite families ----------------------------------------------------

namespace {
// amplitude-pattern table shared by the float and exact 3x3 constructors
const std::vector<std::array<std::vector<int>, 2>> k33_patterns = {
    {{{0, 0}, {2, 2}}}, {{{1, 0}, {0, 1}}}, {{{2, 0}, {1, 2}}}, {{{2, 1}, {0, 2}}}};
const std::vector<std::array<std::vector<int>, 2>> k44_patterns = {
    {{{0, 0}, {2, 1}}}, {{{1, 2}, {3, 3}}}, {{{0, 1}, {3, 2}}}, {{{3, 0}, {2, 2}}},
    {{{1, 1}, {0, 3}}}, {{{1, 0}, {2, 3}}}, {{{2, 0}, {3, 1}}}};
}  // namespace

Subspace ces_3x3(const std::array<double, 4>& lambda) {
  Dims dims({3, 3});
  std::vector<PureState> basis;
  std::vector<std::string> prov;
  for (int i = 0; i < 4; ++i) {
    check_open_unit(lambda[i], "ces_3x3");
    basis.push_back(from_terms(dims, {{std::sqrt(lambda[i]), k33_patterns[i][0]},
                                      {std::sqrt(1 - lambda[i]), k33_patterns[i][1]}}));
    prov.push_back("isometry column " + std::to_string(i) +
                   " of the three-operator 4->3 channel");
  }
  return Subspace::make(dims, std::move(basis), std::move(prov));
}

ExactSubspace ces_3x3_exact(const std::array<RatioPair, 4>& ratios) {
  Dims dims({3, 3});
  std::vector<ExactVec> basis;
  for (int i = 0; i < 4; ++i) {
    check_ratio(ratios[i], "ces_3x3_exact");
    basis.push_back(exact_from_terms(
        dims, {{GRat::integer(ratios[i].first), k33_patterns[i][0]},
               {GRat::integer(ratios[i].second), k33_patterns[i][1]}}));
  }
  return ExactSubspace::make(dims, std::move(basis));
}

Subspace antisymmetric_subspace(int d) {
  if (d < 2) throw std::invalid_argument("antisymmetric_subspace: d >= 2 required");
  Dims dims({d, d});
  double c = 1.0 / std::sqrt(2.0);
  std::vector<PureState> basis;
  std::vector<std::string> prov;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      basis.push_back(from_terms(dims, {{c, {i, j}}, {-c, {j, i}}}));
      prov.push_back("(|" + std::to_string(i) + std::to_string(j) + "> - |" +
                     std::to_string(j) + std::to_string(i) + ">)/sqrt(2)");
    }
  return Subspace::make(dims, std::move(basis), std::move(prov));
}

ExactSubspace antisymmetric_subspace_exact(int d) {
  if (d < 2) throw std::invalid_argument("antisymmetric_subspace_exact: d >= 2 required");
  Dims dims({d, d});
  std::vector<ExactVec> basis;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      basis.push_back(exact_from_terms(
          dims, {{GRat::integer(1), {i, j}}, {GRat::integer(-1), {j, i}}}));
  return ExactSubspace::make(dims, std::move(basis));
}

Subspace ces_4x4(const std::array<double, 7>& lambda) {
  Dims dims({4, 4});
  std::vector<PureState> basis;
  std::vector<std::string> prov;
  for (int i = 0; i < 7; ++i) {
    check_open_unit(lambda[i], "ces_4x4");
    basis.push_back(from_terms(dims, {{std::sqrt(lambda[i]), k44_patterns[i][0]},
                                      {std::sqrt(1 - lambda[i]), k44_patterns[i][1]}}));
    prov.push_back("isometry column " + std::to_string(i) +
                   " of the four-operator 7->4 channel");
  }
  return Subspace::make(dims, std::move(basis), std::move(prov));
}

ExactSubspace ces_4x4_exact(const std::array<RatioPair, 7>& ratios) {
  Dims dims({4, 4});
  std::vector<ExactVec> basis;
  for (int i = 0; i < 7; ++i) {
    check_ratio(ratios[i], "ces_4x4_exact");
    basis.push_back(exact_from_terms(
        dims, {{GRat::integer(ratios[i].first), k44_patterns[i][0]},
               {GRat::integer(ratios[i].second), k44_patterns[i][1]}}));
  }
  return ExactSubspace::make(dims, std::move(basis));
}

// ---- channels behind the bipartite families ---------------------------------

KrausChannel ces_3x3_channel(const std::array<double, 4>& lambda) {
  for (double l : lambda) check_open_unit(l, "ces_3x3_channel");
  auto sq = [](double x) { return std::sqrt(x); };
  Matrix k1 = Matrix::Zero(3, 4), k2 = Matrix::Zero(3, 4), k3 = Matrix::Zero(3, 4);
  k1(0, 0) = sq(lambda[0]);
  k1(1, 1) = sq(lambda[1]);
  k1(2, 2) = sq(lambda[2]);
  k2(0, 1) = sq(1 - lambda[1]);
  k2(2, 3) = sq(lambda[3]);
  k3(2, 0) = sq(1 - lambda[0]);
  k3(1, 2) = sq(1 - lambda[2]);
  k3(0, 3) = sq(1 - lambda[3]);
  return KrausChannel::make(4, 3, {k1, k2, k3});
}

ExactKraus ces_3x3_channel_exact(const std::array<RatioPair, 4>& ratios) {
  for (const RatioPair& r : ratios) check_ratio(r, "ces_3x3_channel_exact");
  ExactMat k1(3, ExactVec(4)), k2(3, ExactVec(4)), k3(3, ExactVec(4));
  k1[0][0] = GRat::integer(ratios[0].first);
  k1[1][1] = GRat::integer(ratios[1].first);
  k1[2][2] = GRat::integer(ratios[2].first);
  k2[0][1] = GRat::integer(ratios[1].second);
  k2[2][3] = GRat::integer(ratios[3].first);
  k3[2][0] = GRat::integer(ratios[0].second);
  k3[1][2] = GRat::integer(ratios[2].second);
  k3[0][3] = GRat::integer(ratios[3].second);
  return ExactKraus{4, 3, {k1, k2, k3}};
}

KrausChannel ces_4x4_channel(const std::array<double, 7>& lambda) {
  for (double l : lambda) check_open_unit(l, "ces_4x4_channel");
  auto sq = [](double x) { return std::sqrt(x); };
  Matrix k1 = Matrix::Zero(4, 7), k2 = Matrix::Zero(4, 7), k3 = Matrix::Zero(4, 7),
         k4 = Matrix::Zero(4, 7);
  k1(0, 0) = sq(lambda[0]);
  k1(1, 5) = sq(lambda[5]);
  k1(2, 6) = sq(lambda[6]);
  k1(3, 3) = sq(lambda[3]);
  k2(2, 0) = sq(1 - lambda[0]);
  k2(1, 4) = sq(lambda[4]);
  k2(0, 2) = sq(lambda[2]);
  k2(3, 6) = sq(1 - lambda[6]);
  k3(1, 1) = sq(lambda[1]);
  k3(3, 2) = sq(1 - lambda[2]);
  k3(2, 3) = sq(1 - lambda[3]);
  k4(0, 4) = sq(1 - lambda[4]);
  k4(3, 1) = sq(1 - lambda[1]);
  k4(2, 5) = sq(1 - lambda[5]);
  return KrausChannel::make(7, 4, {k1, k2, k3, k4});
}

KrausChannel three_qubit_channel(const std::array<double, 3>& lambda) {
  for (double l : lambda) check_open_unit(l, "three_qubit_channel");
  auto sq = [](double x) { return std::sqrt(x); };
  Matrix k1 = Matrix::Zero(4, 3), k2 = Matrix::Zero(4, 3);
  k1(0, 0) = sq(lambda[0]);
  k1(1, 1) = sq(lambda[1]);
  k1(2, 2) = sq(lambda[2]);
  k2(3, 0) = sq(1 - lambda[0]);
  k2(0, 1) = sq(1 - lambda[1]);
  k2(1, 2) = sq(1 - lambda[2]);
  return KrausChannel::make(3, 4, {k1, k2});
}

ExactKraus three_qubit_channel_exact(const std::array<RatioPair, 3>& ratios) {
  for (const RatioPair& r : ratios) check_ratio(r, "three_qubit_channel_exact");
  ExactMat k1(4, ExactVec(3)), k2(4, ExactVec(3));
  k1[0][0] = GRat::integer(ratios[0].first);
  k1[1][1] = GRat::integer(ratios[1].first);
  k1[2][2] = GRat::integer(ratios[2].first);
  k2[3][0] = GRat::integer(ratios[0].second);
  k2[0][1] = GRat::integer(ratios[1].second);
  k2[1][2] = GRat::integer(ratios[2].second);
  return ExactKraus{3, 4, {k1, k2}};
}

// ---- multipartite families ---------------------------------------------------

namespace {

PureState apply_isometry_to_party(const PureState& psi, const Isometry& v, int party) {
  const Dims& dims = psi.dims;
  if (party < 0 || party >= dims.count())
    throw std::invalid_argument("lift_ges: party out of range");
  int d = dims[party];
  if (v.in_dim != d) throw std::invalid_argument("lift_ges: isometry input dimension mismatch");
  auto [db, dc] = v.out_dims;
  long inner = 1, outer = 1;
  for (int s = party + 1; s < dims.count(); ++s) inner *= dims[s];
  for (int s = 0; s < party; ++s) outer *= dims[s];
  long dd = static_cast<long>(db) * dc;
  Vector out = Vector::Zero(outer * dd * inner);
  for (long o = 0; o < outer; ++o)
    for (long in = 0; in < inner; ++in)
      for (long m = 0; m < dd; ++m) {
        Complex sum = 0;
        for (int k = 0; k < d; ++k)
          sum += v.matrix(m, k) * psi.amplitudes[(o * d + k) * inner + in];
        out[(o * dd + m) * inner + in] = sum;
      }
  std::vector<int> nd = dims.locals;
  nd[party] = db;
  nd.insert(nd.begin() + party + 1, dc);
  return PureState::raw(Dims(std::move(nd)), std::move(out));
}

}  // namespace

Subspace lift_ges(const Subspace& ces, const Isometry& v, int party) {
  std::vector<PureState> basis;
  std::vector<std::string> prov;
  basis.reserve(ces.basis.size());
  for (size_t i = 0; i < ces.basis.size(); ++i) {
    basis.push_back(apply_isometry_to_party(ces.basis[i], v, party));
    std::string note = "isometry applied to party " + std::to_string(party);
    if (i < ces.provenance.size()) note += "; from: " + ces.provenance[i];
    prov.push_back(std::move(note));
  }
  Dims lifted_dims = basis.front().dims;
  return Subspace::make(std::move(lifted_dims), std::move(basis), std::move(prov));
}

Subspace ges_3qubit(double l1, double l2, double l3) {
  check_open_unit(l1, "ges_3qubit");
  check_open_unit(l2, "ges_3qubit");
  check_open_unit(l3, "ges_3qubit");
  Dims dims({2, 2, 2});
  double r2 = std::sqrt(0.5);
  std::vector<PureState> basis = {
      from_terms(dims, {{std::sqrt(l1), {0, 0, 0}}, {std::sqrt(1 - l1), {1, 1, 1}}}),
      from_terms(dims, {{std::sqrt(l2 / 2), {0, 1, 0}},
                        {std::sqrt(l2 / 2), {1, 0, 0}},
                        {std::sqrt(1 - l2), {0, 0, 1}}}),
      from_terms(dims, {{std::sqrt(l3 / 2), {0, 1, 0}},
                        {-std::sqrt(l3 / 2), {1, 0, 0}},
                        {std::sqrt((1 - l3) / 2), {0, 1, 1}},
                        {std::sqrt((1 - l3) / 2), {1, 0, 1}}})};
  std::vector<std::string> prov = {
      "two-operator 3->4 channel column 0, pair mixer, square split",
      "two-operator 3->4 channel column 1, pair mixer, square split",
      "two-operator 3->4 channel column 2, pair mixer, square split"};
  return Subspace::make(dims, std::move(basis), std::move(prov));
}

ExactSubspace ges_3qubit_exact(const std::array<RatioPair, 3>& ratios) {
  for (const RatioPair& r : ratios) check_ratio(r, "ges_3qubit_exact");
  Dims dims({2, 2, 2});
  auto R = [&](int i) { return GRat::integer(ratios[i].first); };
  auto S = [&](int i) { return GRat::integer(ratios[i].second); };
  std::vector<ExactVec> basis = {
      exact_from_terms(dims, {{R(0), {0, 0, 0}}, {S(0), {1, 1, 1}}}),
      exact_from_terms(dims, {{R(1), {0, 1, 0}}, {R(1), {1, 0, 0}}, {S(1), {0, 0, 1}}}),
      exact_from_terms(dims, {{R(2), {0, 1, 0}},
                              {GRat::integer(-ratios[2].first), {1, 0, 0}},
                              {S(2), {0, 1, 1}},
                              {S(2), {1, 0, 1}}})};
  return ExactSubspace::make(dims, std::move(basis));
}

Subspace ges_3qubit_orthogonal(double l1, double l2, double l3) {
  check_open_unit(l1, "ges_3qubit_orthogonal");
  check_open_unit(l2, "ges_3qubit_orthogonal");
  check_open_unit(l3, "ges_3qubit_orthogonal");
  Dims dims({2, 2, 2});
  std::vector<PureState> basis = {
      from_terms(dims, {{std::sqrt(1 - l1), {0, 0, 0}}, {-std::sqrt(l1), {1, 1, 1}}}),
      from_terms(dims, {{std::sqrt((1 - l2) / 2), {0, 1, 0}},
                        {std::sqrt((1 - l2) / 2), {1, 0, 0}},
                        {-std::sqrt(l2), {0, 0, 1}}}),
      from_terms(dims, {{std::sqrt((1 - l3) / 2), {0, 1, 0}},
                        {-std::sqrt((1 - l3) / 2), {1, 0, 0}},
                        {-std::sqrt(l3 / 2), {0, 1, 1}},
                        {-std::sqrt(l3 / 2), {1, 0, 1}}})};
  std::vector<std::string> prov(3, "orthogonal partner of the three-qubit family");
  return Subspace::make(dims, std::move(basis), std::move(prov));
}

ExactSubspace ges_3qubit_orthogonal_exact(const std::array<RatioPair, 3>& ratios) {
  for (const RatioPair& r : ratios) check_ratio(r, "ges_3qubit_orthogonal_exact");
  Dims dims({2, 2, 2});
  // swapped ratios keep the pair orthogonal to ges_3qubit_exact(ratios)
  auto S = [&](int i) { return GRat::integer(ratios[i].second); };
  std::vector<ExactVec> basis = {
      exact_from_terms(dims, {{S(0), {0, 0, 0}}, {GRat::integer(-ratios[0].first), {1, 1, 1}}}),
      exact_from_terms(dims, {{S(1), {0, 1, 0}},
                              {S(1), {1, 0, 0}},
                              {GRat::integer(-2 * ratios[1].first), {0, 0, 1}}}),
      exact_from_terms(dims, {{S(2), {0, 1, 0}},
                              {GRat::integer(-ratios[2].second), {1, 0, 0}},
                              {GRat::integer(-ratios[2].first), {0, 1, 1}},
                              {GRat::integer(-ratios[2].first), {1, 0, 1}}})};
  return ExactSubspace::make(dims, std::move(basis));
}

// ---- mixers and factorization schemes ---------------------------------------

Matrix pair_mixer4() {
  Matrix u = Matrix::Identity(4, 4);
  double r = std::sqrt(0.5);
  u(1, 1) = r;
  u(1, 2) = r;
  u(2, 1) = r;
  u(2, 2) = -r;
  return u;
}

namespace {

Matrix mixer_q4() {
  Matrix q(4, 4);
  q.setConstant(0.5);
  for (int i = 0; i < 4; ++i) q(i, i) = -0.5;
  return q;
}

Matrix mixer_t4() {
  Matrix t = Matrix::Zero(4, 4);
  double a = -1.0 / 3.0, b = 2.0 / 3.0;
  t(0, 0) = a; t(0, 1) = b; t(0, 3) = b;
  t(1, 0) = b; t(1, 1) = a; t(1, 3) = b;
  t(2, 2) = 1.0;
  t(3, 0) = b; t(3, 1) = b; t(3, 3) = a;
  return t;
}

ExactMat exact_mixer_q4() {
  ExactMat q(4, ExactVec(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) q[i][j] = GRat(rat(i == j ? -1 : 1, 2));
  return q;
}

ExactMat exact_mixer_t4() {
  ExactMat t(4, ExactVec(4));
  GRat a(rat(-1, 3)), b(rat(2, 3)), one(rat(1));
  t[0][0] = a; t[0][1] = b; t[0][3] = b;
  t[1][0] = b; t[1][1] = a; t[1][3] = b;
  t[2][2] = one;
  t[3][0] = b; t[3][1] = b; t[3][3] = a;
  return t;
}

}  // namespace

Matrix four_qubit_mixer_a() { return mixer_q4() * mixer_t4(); }
Matrix four_qubit_mixer_b() { return mixer_t4(); }
ExactMat exact_pair_mixer_a() { return exact_mul(exact_mixer_q4(), exact_mixer_t4()); }
ExactMat exact_pair_mixer_b() { return exact_mixer_t4(); }

Matrix three_level_mixer9() {
  Matrix u = Matrix::Identity(9, 9);
  double a = -1.0 / 3.0, b = 2.0 / 3.0;
  const int lv[3] = {2, 5, 6};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) u(lv[i], lv[j]) = (i == j) ? a : b;
  return u;
}

ExactMat exact_three_level_mixer9() {
  ExactMat u = exact_identity(9);
  GRat a(rat(-1, 3)), b(rat(2, 3));
  const int lv[3] = {2, 5, 6};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) u[lv[i]][lv[j]] = (i == j) ? a : b;
  return u;
}

FactorizationScheme scheme_pair_split(int subsystem) {
  return FactorizationScheme::square_split(subsystem, 2, 2);
}

FactorizationScheme scheme_four_qubit_a(int subsystem) {
  FactorizationScheme s = FactorizationScheme::square_split(subsystem, 2, 2);
  s.pre_unitary = four_qubit_mixer_a();
  return s;
}

FactorizationScheme scheme_four_qubit_b(int subsystem) {
  FactorizationScheme s = FactorizationScheme::square_split(subsystem, 2, 2);
  s.pre_unitary = four_qubit_mixer_b();
  return s;
}

FactorizationScheme scheme_qutrit_split(int subsystem) {
  FactorizationScheme s;
  s.subsystem = subsystem;
  s.new_dims = {3, 3};
  s.basis_map = {{2, 2}, {2, 0}, {2, 1}, {1, 0}, {0, 2}, {0, 1}, {0, 0}, {1, 2}, {1, 1}};
  return s;
}

// ---- four-qubit family -------------------------------------------------------

Subspace ges_4qubit(const std::array<double, 7>& lambda) {
  Subspace ces = ces_4x4(lambda);
  std::vector<PureState> basis;
  std::vector<std::string> prov;
  for (size_t i = 0; i < ces.basis.size(); ++i) {
    PureState s = factorize_subsystem(ces.basis[i], scheme_four_qubit_a(0));
    s = factorize_subsystem(s, scheme_four_qubit_b(2));
    basis.push_back(std::move(s));
    prov.push_back(ces.provenance[i] + "; mixers applied, both parties pair-split");
  }
  Dims four_dims = basis.front().dims;
  return Subspace::make(std::move(four_dims), std::move(basis), std::move(prov));
}

ExactSubspace ges_4qubit_exact(const std::array<RatioPair, 7>& ratios) {
  ExactSubspace ces = ces_4x4_exact(ratios);
  ExactMat ma = exact_pair_mixer_a(), mb = exact_pair_mixer_b();
  auto split22 = FactorizationScheme::square_split(0, 2, 2).basis_map;
  std::vector<ExactVec> basis;
  for (const ExactVec& v : ces.basis) {
    Dims d44({4, 4});
    ExactVec x = exact_apply_local(v, d44, 0, ma);
    x = exact_relabel_split(x, d44, 0, {2, 2}, split22);
    Dims d224({2, 2, 4});
    x = exact_apply_local(x, d224, 2, mb);
    x = exact_relabel_split(x, d224, 2, {2, 2}, split22);
    basis.push_back(std::move(x));
  }
  return ExactSubspace::make(Dims({2, 2, 2, 2}), std::move(basis));
}

// ---- Holevo-Werner lift ------------------------------------------------------

Subspace hw_ges() {
  Subspace lifted = lift_ges(antisymmetric_subspace(3),
                             isometry_from_kraus(holevo_werner(3)), 1);
  lifted.provenance.assign(3, "antisymmetric 3x3 basis pushed through the Holevo-Werner isometry");
  return lifted;
}

ExactSubspace hw_ges_exact() {
  Dims dims({3, 3, 3});
  GRat one = GRat::integer(1), neg = GRat::integer(-1);
  std::vector<ExactVec> basis = {
      exact_from_terms(dims, {{one, {0, 0, 0}}, {neg, {0, 2, 2}}, {one, {1, 1, 0}}, {one, {1, 2, 1}}}),
      exact_from_terms(dims, {{one, {0, 0, 1}}, {one, {0, 1, 2}}, {one, {2, 1, 0}}, {one, {2, 2, 1}}}),
      exact_from_terms(dims, {{one, {1, 0, 1}}, {one, {1, 1, 2}}, {neg, {2, 0, 0}}, {one, {2, 2, 2}}})};
  return ExactSubspace::make(dims, std::move(basis));
}

Isometry antisym_qutrit_isometry() {
  Matrix v = Matrix::Zero(9, 3);
  double c = std::sqrt(0.5);
  // |0> -> (|01>-|10>)/sqrt2, |1> -> (|02>-|20>)/sqrt2, |2> -> (|12>-|21>)/sqrt2
  v(0 * 3 + 1, 0) = c;
  v(1 * 3 + 0, 0) = -c;
  v(0 * 3 + 2, 1) = c;
  v(2 * 3 + 0, 1) = -c;
  v(1 * 3 + 2, 2) = c;
  v(2 * 3 + 1, 2) = -c;
  return Isometry::make(3, {3, 3}, std::move(v));
}

// ---- POVM triple -------------------------------------------------------------

PovmTriple povm_triple(double alpha) {
  if (!(alpha > 0.0 && alpha < M_PI / 4))
    throw std::invalid_argument("povm_triple: alpha must lie in (0, pi/4)");
  double a = 1.0 / (1.0 + std::sin(2 * alpha));
  Eigen::Vector2cd u(std::cos(alpha), std::sin(alpha));
  Eigen::Vector2cd v(std::sin(alpha), std::cos(alpha));
  PovmTriple t;
  t.alpha = alpha;
  t.p1 = a * (u * u.adjoint());
  t.p2 = a * (v * v.adjoint());
  t.p3 = Matrix::Identity(2, 2) - t.p1 - t.p2;
  return t;
}

// ---- three-qutrit construction -----------------------------------------------

QutritLayout QutritLayout::paper_values() {
  QutritLayout l;
  l.alpha = {M_PI / 6, M_PI / 6, M_PI / 6, M_PI / 6, M_PI / 6};
  l.slot = {{{0, 1, 2}, {2, 0, 1}, {1, 2, 0}, {0, 2, 1}, {2, 1, 0}}};
  l.diag = {{{2.0 / 3, 0, 1.0 / 3},
             {0, 1.0 / 4, 3.0 / 4},
             {1.0 / 6, 5.0 / 6, 0},
             {1.0 / 3, 0, 2.0 / 3},
             {0, 3.0 / 4, 1.0 / 4},
             {5.0 / 6, 1.0 / 6, 0}}};
  l.perm = {{{0, 1, 2, 3, 6, 7, 4, 5, 8},
             {5, 3, 6, 4, 7, 0, 8, 2, 1},
             {3, 6, 7, 0, 2, 5, 1, 8, 4}}};
  return l;
}

void QutritLayout::validate() const {
  for (double a : alpha)
    if (!(a > 0.0 && a < M_PI / 4))
      throw std::invalid_argument("QutritLayout: block angle outside (0, pi/4)");
  for (const auto& s : slot) {
    std::array<bool, 3> seen{};
    for (int e : s) {
      if (e < 0 || e > 2) throw std::invalid_argument("QutritLayout: bad POVM slot");
      seen[static_cast<size_t>(e)] = true;
    }
    if (!(seen[0] && seen[1] && seen[2]))
      throw std::invalid_argument("QutritLayout: POVM slots must be a permutation");
  }
  std::array<int, 3> tail_count{};
  for (const auto& row : diag) {
    double sum = 0;
    int nonzero = 0;
    for (int i = 0; i < 3; ++i) {
      double v = row[static_cast<size_t>(i)];
      if (v < 0 || v >= 1.0)
        throw std::invalid_argument("QutritLayout: tail value outside [0,1)");
      if (v > 0) {
        ++nonzero;
        ++tail_count[static_cast<size_t>(i)];
        sum += v;
      }
    }
    if (nonzero < 2)
      throw std::invalid_argument("QutritLayout: each tail row needs at least two entries");
    if (std::abs(sum - 1.0) > 1e-12)
      throw std::invalid_argument("QutritLayout: tail row does not add up to 1");
  }
  // 5 rank-one blocks spend 5 of the 9 singular values; exactly 4 remain per
  // operator for the tail, which is the only feasible count
  for (int c : tail_count)
    if (c != 4)
      throw std::invalid_argument("QutritLayout: each operator must carry exactly 4 tail values");
  for (const auto& p : perm) {
    std::array<bool, 9> seen{};
    for (int r : p) {
      if (r < 0 || r > 8 || seen[static_cast<size_t>(r)])
        throw std::invalid_argument("QutritLayout: bad row permutation");
      seen[static_cast<size_t>(r)] = true;
    }
  }
}

namespace {

// (c1, c2, c3): the two POVM eigenvector rows scaled by the square roots of
// the nonzero eigenvalues; rank-one block element e contributes row (c1,c2),
// (c2,c1) or (c3,-c3).
std::array<double, 3> block_coeffs(double alpha) {
  double s2 = std::sin(2 * alpha);
  double a = 1.0 / (1.0 + s2);
  return {std::cos(alpha) * std::sqrt(a), std::sin(alpha) * std::sqrt(a),
          std::sqrt(s2 * a)};
}

template <typename Scalar>
std::pair<Scalar, Scalar> block_row(int element, const std::array<Scalar, 3>& c) {
  switch (element) {
    case 0: return {c[0], c[1]};
    case 1: return {c[1], c[0]};
    default: return {c[2], Scalar(-c[2])};
  }
}

}  // namespace

QutritConstruction ges_3qutrit_full(const QutritLayout& layout) {
  layout.validate();
  std::vector<Matrix> kraus;
  for (int i = 0; i < 3; ++i) {
    Matrix pre = Matrix::Zero(9, 16);
    for (int j = 0; j < 5; ++j) {
      auto c = block_coeffs(layout.alpha[static_cast<size_t>(j)]);
      auto [x, y] = block_row(layout.slot[static_cast<size_t>(j)][static_cast<size_t>(i)], c);
      pre(2 * j, 2 * j) = x;
      pre(2 * j, 2 * j + 1) = y;
    }
    int row = 1;
    for (int r = 0; r < 6; ++r) {
      double v = layout.diag[static_cast<size_t>(r)][static_cast<size_t>(i)];
      if (v > 0) {
        pre(row, 10 + r) = std::sqrt(v);
        row += 2;
      }
    }
    Matrix k = Matrix::Zero(9, 16);
    for (int r = 0; r < 9; ++r)
      k.row(layout.perm[static_cast<size_t>(i)][static_cast<size_t>(r)]) = pre.row(r);
    kraus.push_back(std::move(k));
  }

  QutritConstruction out{KrausChannel::make(16, 9, std::move(kraus)), {}, {}, {}, {}};
  out.isometry = isometry_from_kraus(out.channel);

  Dims ces_dims({9, 3});
  std::vector<PureState> ces_basis;
  std::vector<std::string> prov;
  for (int mu = 0; mu < 16; ++mu) {
    ces_basis.push_back(PureState::raw(ces_dims, out.isometry.matrix.col(mu)));
    prov.push_back("isometry column " + std::to_string(mu) +
                   " of the three-operator 16->9 channel");
  }
  out.ces = Subspace::make(ces_dims, std::move(ces_basis), std::move(prov));

  Matrix mixer = three_level_mixer9();
  std::vector<PureState> mixed;
  for (const PureState& b : out.ces.basis)
    mixed.push_back(apply_local_unitary(b, mixer, 0));
  out.mixed_ces = Subspace::make(ces_dims, std::move(mixed));

  FactorizationScheme split = scheme_qutrit_split(0);
  std::vector<PureState> ges_basis;
  std::vector<std::string> ges_prov;
  for (size_t i = 0; i < out.mixed_ces.basis.size(); ++i) {
    ges_basis.push_back(factorize_subsystem(out.mixed_ces.basis[i], split));
    ges_prov.push_back(out.ces.provenance[i] + "; three-level mixer, nine-level split");
  }
  out.ges = Subspace::make(Dims({3, 3, 3}), std::move(ges_basis), std::move(ges_prov));
  return out;
}

Subspace ges_3qutrit() { return ges_3qutrit_full(QutritLayout::paper_values()).ges; }

ExactSubspace ges_3qutrit_exact(const std::array<RatioPair, 6>& ratios) {
  for (const RatioPair& r : ratios) check_ratio(r, "ges_3qutrit_exact");
  const QutritLayout layout = QutritLayout::paper_values();
  // tan(alpha) = 1/2 makes the block coefficient triple rational
  std::array<GRat, 3> c = {GRat(rat(2, 3)), GRat(rat(1, 3)), GRat(rat(2, 3))};

  std::vector<ExactMat> kraus;
  for (int i = 0; i < 3; ++i) {
    ExactMat pre(9, ExactVec(16));
    for (int j = 0; j < 5; ++j) {
      auto [x, y] = block_row(layout.slot[static_cast<size_t>(j)][static_cast<size_t>(i)], c);
      pre[static_cast<size_t>(2 * j)][static_cast<size_t>(2 * j)] = x;
      pre[static_cast<size_t>(2 * j)][static_cast<size_t>(2 * j + 1)] = y;
    }
    int row = 1;
    for (int r = 0; r < 6; ++r) {
      if (layout.diag[static_cast<size_t>(r)][static_cast<size_t>(i)] <= 0) continue;
      // first operator holding the row gets the numerator, the second the
      // denominator of the user ratio
      bool first = true;
      for (int q = 0; q < i; ++q)
        if (layout.diag[static_cast<size_t>(r)][static_cast<size_t>(q)] > 0) first = false;
      long val = first ? ratios[static_cast<size_t>(r)].first
                       : ratios[static_cast<size_t>(r)].second;
      pre[static_cast<size_t>(row)][static_cast<size_t>(10 + r)] = GRat::integer(val);
      row += 2;
    }
    ExactMat k(9, ExactVec(16));
    for (int r = 0; r < 9; ++r)
      k[static_cast<size_t>(layout.perm[static_cast<size_t>(i)][static_cast<size_t>(r)])] =
          pre[static_cast<size_t>(r)];
    kraus.push_back(std::move(k));
  }

  // stack the isometry columns: amplitude (a, e) of column mu is K_e[a][mu]
  Dims ces_dims({9, 3});
  std::vector<ExactVec> ces;
  for (int mu = 0; mu < 16; ++mu) {
    ExactVec v(27);
    for (int a = 0; a < 9; ++a)
      for (int e = 0; e < 3; ++e)
        v[static_cast<size_t>(a * 3 + e)] =
            kraus[static_cast<size_t>(e)][static_cast<size_t>(a)][static_cast<size_t>(mu)];
    ces.push_back(std::move(v));
  }

  ExactMat mixer = exact_three_level_mixer9();
  FactorizationScheme split = scheme_qutrit_split(0);
  std::vector<ExactVec> ges;
  for (const ExactVec& v : ces) {
    ExactVec x = exact_apply_local(v, ces_dims, 0, mixer);
    ges.push_back(exact_relabel_split(x, ces_dims, 0, {3, 3}, split.basis_map));
  }
  return ExactSubspace::make(Dims({3, 3, 3}), std::move(ges));
}

}  // namespace ges
