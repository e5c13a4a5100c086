#include "ges/json_io.hpp"

namespace ges {

namespace {

Json complex_to_json(const Complex& c) {
  return Json{{"re", c.real()}, {"im", c.imag()}};
}

Complex complex_from_json(const Json& j) {
  return Complex(j.at("re").get<double>(), j.at("im").get<double>());
}

Json dims_to_json(const Dims& d) { return Json(d.locals); }

Dims dims_from_json(const Json& j) { return Dims(j.get<std::vector<int>>()); }

Json amplitudes_to_json(const Vector& v) {
  Json arr = Json::array();
  for (long i = 0; i < v.size(); ++i) arr.push_back(complex_to_json(v[i]));
  return arr;
}

Vector amplitudes_from_json(const Json& j) {
  Vector v(j.size());
  long i = 0;
  for (const Json& e : j) v[i++] = complex_from_json(e);
  return v;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (long r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (long c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  long rows = static_cast<long>(j.size());
  long cols = rows ? static_cast<long>(j.at(0).size()) : 0;
  Matrix m(rows, cols);
  for (long r = 0; r < rows; ++r) {
    const Json& row = j.at(static_cast<size_t>(r));
    if (static_cast<long>(row.size()) != cols)
      throw std::invalid_argument("matrix JSON: ragged rows");
    for (long c = 0; c < cols; ++c)
      m(r, c) = complex_from_json(row.at(static_cast<size_t>(c)));
  }
  return m;
}

}  // namespace

Json to_json(const PureState& psi) {
  return Json{{"dims", dims_to_json(psi.dims)},
              {"amplitudes", amplitudes_to_json(psi.amplitudes)}};
}

PureState pure_state_from_json(const Json& j) {
  return PureState::make(dims_from_json(j.at("dims")),
                         amplitudes_from_json(j.at("amplitudes")));
}

Json to_json(const DensityMatrix& rho) {
  return Json{{"dims", dims_to_json(rho.dims)},
              {"matrix", matrix_to_json(rho.matrix)}};
}

DensityMatrix density_from_json(const Json& j) {
  return DensityMatrix::make(dims_from_json(j.at("dims")),
                             matrix_from_json(j.at("matrix")));
}

Json to_json(const KrausChannel& ch) {
  Json ops = Json::array();
  for (const Matrix& k : ch.kraus) ops.push_back(matrix_to_json(k));
  return Json{{"in_dim", ch.in_dim}, {"out_dim", ch.out_dim}, {"kraus", std::move(ops)}};
}

KrausChannel channel_from_json(const Json& j) {
  std::vector<Matrix> ops;
  for (const Json& k : j.at("kraus")) ops.push_back(matrix_from_json(k));
  return KrausChannel::make(j.at("in_dim").get<int>(), j.at("out_dim").get<int>(),
                            std::move(ops));
}

Json to_json(const Subspace& w) {
  Json basis = Json::array();
  for (const PureState& b : w.basis) basis.push_back(amplitudes_to_json(b.amplitudes));
  Json out{{"dims", dims_to_json(w.dims)}, {"basis", std::move(basis)}};
  if (!w.provenance.empty()) out["provenance"] = w.provenance;
  return out;
}

Subspace subspace_from_json(const Json& j) {
  Dims dims = dims_from_json(j.at("dims"));
  std::vector<PureState> basis;
  for (const Json& b : j.at("basis"))
    basis.push_back(PureState::make(dims, amplitudes_from_json(b)));
  std::vector<std::string> prov;
  if (j.contains("provenance")) prov = j.at("provenance").get<std::vector<std::string>>();
  return Subspace::make(std::move(dims), std::move(basis), std::move(prov));
}

Json to_json(const ExactSubspace& w) {
  Json basis = Json::array();
  for (const ExactVec& v : w.basis) {
    Json col = Json::array();
    for (const GRat& a : v)
      col.push_back(Json::array({rat_to_string(a.re), rat_to_string(a.im)}));
    basis.push_back(std::move(col));
  }
  return Json{{"dims", dims_to_json(w.dims)}, {"basis", std::move(basis)}, {"exact", true}};
}

ExactSubspace exact_subspace_from_json(const Json& j) {
  Dims dims = dims_from_json(j.at("dims"));
  std::vector<ExactVec> basis;
  for (const Json& col : j.at("basis")) {
    ExactVec v;
    v.reserve(col.size());
    for (const Json& a : col)
      v.emplace_back(rat_from_string(a.at(0).get<std::string>()),
                     rat_from_string(a.at(1).get<std::string>()));
    basis.push_back(std::move(v));
  }
  return ExactSubspace::make(std::move(dims), std::move(basis));
}

Json to_json(const Certificate& c) {
  Json out{{"cut", c.cut.side_a},
           {"mode", to_string(c.mode)},
           {"verdict", to_string(c.verdict)},
           {"restarts", c.restarts},
           {"span_sibling", c.span_sibling}};
  if (c.lambda1) out["lambda1"] = *c.lambda1;
  if (!c.groebner.empty()) out["groebner"] = c.groebner;
  if (c.witness) out["witness"] = amplitudes_to_json(c.witness->amplitudes);
  return out;
}

Json to_json(const std::vector<Certificate>& cs) {
  Json arr = Json::array();
  for (const Certificate& c : cs) arr.push_back(to_json(c));
  return arr;
}

Json to_json(const SubspaceEntanglement& se) {
  Json per = Json::array();
  for (const auto& [cut, l] : se.per_cut_lambda1)
    per.push_back(Json{{"cut", cut.side_a}, {"lambda1", l}});
  return Json{{"per_cut", std::move(per)},
              {"g_gme", se.g_gme},
              {"max_cut", se.max_cut.side_a}};
}

Json to_json(const BoundReport& r) {
  Json out{{"overlap", r.overlap},
           {"g_gme_used", r.g_gme_used},
           {"concurrence_lb", r.concurrence_lb},
           {"negativity_lb", r.negativity_lb},
           {"robustness_white", r.robustness_white},
           {"d_used", r.d_used},
           {"d_explicit", r.d_explicit}};
  out["robustness_spectrum"] =
      r.robustness_spectrum ? Json(*r.robustness_spectrum) : Json(nullptr);
  return out;
}

}  // namespace ges
