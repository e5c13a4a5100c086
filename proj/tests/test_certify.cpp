#include <doctest.h>

#include <cmath>

#include "ges/certify.hpp"
#include "helpers.hpp"

using namespace ges;
using namespace ges::test;

TEST_SUITE_BEGIN("certify");

namespace {

ExactSubspace exact_span(const Dims& dims,
                         const std::vector<std::vector<std::pair<long, std::vector<int>>>>& vecs) {
  std::vector<ExactVec> basis;
  for (const auto& terms : vecs) {
    ExactVec v(dims.total());
    for (const auto& [c, idx] : terms)
      v[flatten(dims, idx)] = v[flatten(dims, idx)] + GRat::integer(c);
    basis.push_back(std::move(v));
  }
  return ExactSubspace::make(dims, std::move(basis));
}

}  // namespace

TEST_CASE("minor system of the diagonal pencil") {
  ExactSubspace w = exact_span(Dims({2, 2}), {{{1, {0, 0}}}, {{1, {1, 1}}}});
  auto sys = minor_system(w, cut_of({0}, 2));
  REQUIRE(sys.size() == 1);
  Polynomial b1b2 = Polynomial::variable(2, 0) * Polynomial::variable(2, 1);
  CHECK(sys[0] == b1b2);
  CHECK_FALSE(only_trivial_root(sys));
}

TEST_CASE("minor system of a single maximally entangled vector") {
  ExactSubspace w = exact_span(Dims({2, 2}), {{{1, {0, 0}}, {1, {1, 1}}}});
  auto sys = minor_system(w, cut_of({0}, 2));
  REQUIRE(sys.size() == 1);
  Polynomial b1sq = Polynomial::variable(1, 0) * Polynomial::variable(1, 0);
  CHECK(sys[0] == b1sq);
  CHECK(only_trivial_root(sys));
}

TEST_CASE("minor count for the 4x2 spanning set") {
  // 4x2 pencil: C(4,2) * C(2,2) = 6 minors
  ExactSubspace w = ExactSubspace::make(
      Dims({4, 2}),
      [] {
        std::vector<ExactVec> b;
        ExactKraus k = three_qubit_channel_exact({{{1, 1}, {1, 1}, {1, 1}}});
        for (int mu = 0; mu < 3; ++mu) {
          ExactVec v(8);
          for (int a = 0; a < 4; ++a)
            for (int e = 0; e < 2; ++e)
              v[static_cast<size_t>(a * 2 + e)] =
                  k.kraus[static_cast<size_t>(e)][static_cast<size_t>(a)][static_cast<size_t>(mu)];
          b.push_back(std::move(v));
        }
        return b;
      }());
  auto sys = minor_system(w, cut_of({0}, 2));
  CHECK(sys.size() == 6);
  CHECK(only_trivial_root(sys));
}

TEST_CASE("exact certification of the rationalized three-qubit family") {
  for (auto ratios : {std::array<RatioPair, 3>{{{1, 1}, {1, 1}, {1, 1}}},
                      std::array<RatioPair, 3>{{{1, 2}, {1, 2}, {1, 2}}},
                      std::array<RatioPair, 3>{{{2, 3}, {2, 3}, {2, 3}}}}) {
    ExactSubspace w = ges_3qubit_exact(ratios);
    auto certs = certify_ges_exact(w);
    REQUIRE(certs.size() == 3);
    for (const Certificate& c : certs) {
      CHECK(c.verdict == Verdict::Entangled);
      CHECK(c.groebner == "{1} on all charts");
      CHECK(c.span_sibling);
    }
  }
}

TEST_CASE("exact certification finds products where they exist") {
  ExactSubspace w = exact_span(Dims({2, 2}), {{{1, {0, 0}}}, {{1, {1, 1}}}});
  Certificate c = certify_ces_exact(w, cut_of({0}, 2));
  CHECK(c.verdict == Verdict::ProductFound);
  CHECK(c.witness.has_value());

  // the rationalized 3x3 family is entangled across its single cut
  ExactSubspace ces = ces_3x3_exact({{{1, 1}, {1, 2}, {2, 3}, {1, 1}}});
  Certificate c2 = certify_ces_exact(ces, cut_of({0}, 2));
  CHECK(c2.verdict == Verdict::Entangled);
}

TEST_CASE("seesaw on the antisymmetric subspace reaches one half") {
  OverlapResult r = max_product_overlap(antisymmetric_subspace(3), cut_of({0}, 2), 50, 3);
  CHECK(r.lambda1 == doctest::Approx(0.5).epsilon(1e-6));
  // witness is a unit product state
  CHECK(r.witness.norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("seesaw saturates on spaces with product vectors") {
  // the full 2x2 space contains products
  Subspace full = Subspace::make(
      Dims({2, 2}), {state_of(Dims({2, 2}), {{1.0, {0, 0}}}),
                     state_of(Dims({2, 2}), {{1.0, {0, 1}}}),
                     state_of(Dims({2, 2}), {{1.0, {1, 0}}}),
                     state_of(Dims({2, 2}), {{1.0, {1, 1}}})});
  CHECK(max_product_overlap(full, cut_of({0}, 2), 10, 1).lambda1 ==
        doctest::Approx(1.0).epsilon(1e-9));

  Subspace bell_span = Subspace::make(Dims({2, 2}), {bell()});
  CHECK(max_product_overlap(bell_span, cut_of({0}, 2), 10, 1).lambda1 ==
        doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("seesaw objective is monotone within a run") {
  Subspace w = hw_ges();
  for (const Bipartition& cut : all_bipartitions(3)) {
    std::vector<Matrix> mats;
    for (const PureState& b : w.basis) mats.push_back(matricize(b, cut));
    for (uint64_t s : {11u, 22u, 33u}) {
      std::vector<double> trace;
      seesaw_run(mats, s, 200, 1e-14, nullptr, nullptr, &trace);
      for (size_t i = 1; i < trace.size(); ++i)
        CHECK(trace[i] >= trace[i - 1] - 1e-12);
    }
  }
}

TEST_CASE("seesaw is deterministic and serial equals parallel") {
  Subspace w = ges_3qubit(0.3, 0.6, 0.9);
  Bipartition cut = cut_of({0}, 3);
  double a = max_product_overlap(w, cut, 32, 99, Exec::Serial).lambda1;
  double b = max_product_overlap(w, cut, 32, 99, Exec::Parallel).lambda1;
  double c = max_product_overlap(w, cut, 32, 99, Exec::Parallel).lambda1;
  CHECK(a == b);
  CHECK(b == c);
}

TEST_CASE("lambda1 is invariant under local unitaries") {
  Subspace w = ges_3qubit(0.4, 0.55, 0.7);
  Bipartition cut = cut_of({0, 1}, 3);
  double before = max_product_overlap(w, cut, 80, 5).lambda1;
  std::vector<PureState> rotated;
  for (const PureState& b : w.basis) {
    PureState s = apply_local_unitary(b, random_unitary(2, 301), 0);
    s = apply_local_unitary(s, random_unitary(2, 302), 1);
    s = apply_local_unitary(s, random_unitary(2, 303), 2);
    rotated.push_back(std::move(s));
  }
  Subspace rw = Subspace::make(w.dims, std::move(rotated));
  double after = max_product_overlap(rw, cut, 80, 5).lambda1;
  CHECK(before == doctest::Approx(after).epsilon(2e-6));
}

TEST_CASE("numeric ges certification of the three-qubit family") {
  CertifyOptions opts;
  opts.restarts = 120;
  auto certs = certify_ges(ges_3qubit(0.5, 0.5, 0.5), opts);
  REQUIRE(certs.size() == 3);
  for (const Certificate& c : certs) {
    CHECK(c.verdict == Verdict::Entangled);
    REQUIRE(c.lambda1.has_value());
    CHECK(*c.lambda1 < 1.0 - 1e-6);
  }
  CHECK(all_entangled(certs));
}

TEST_CASE("numeric certification flags product vectors with a witness") {
  // span{|110>, |001>} contains products across every cut
  Subspace w = Subspace::make(Dims({2, 2, 2}),
                              {state_of(Dims({2, 2, 2}), {{1.0, {1, 1, 0}}}),
                               state_of(Dims({2, 2, 2}), {{1.0, {0, 0, 1}}})});
  auto certs = certify_ges(w, CertifyOptions{.restarts = 40});
  bool product_somewhere = false;
  for (const Certificate& c : certs)
    if (c.verdict == Verdict::ProductFound) {
      product_somewhere = true;
      REQUIRE(c.witness.has_value());
      // the witness really sits in the span up to numerical residue
      Matrix p = projector_onto(w);
      double overlap = (c.witness->amplitudes.adjoint() * p * c.witness->amplitudes)(0).real();
      CHECK(overlap > 1.0 - 1e-9);
    }
  CHECK(product_somewhere);
  CHECK_FALSE(all_entangled(certs));
}

TEST_CASE("numeric and exact certifiers agree on rational instances") {
  // entangled instance
  ExactSubspace ex = ges_3qubit_exact({{{1, 2}, {2, 3}, {1, 1}}});
  auto exact_certs = certify_ges_exact(ex);
  auto numeric_certs = certify_ges(to_subspace(ex), CertifyOptions{.restarts = 120});
  REQUIRE(exact_certs.size() == numeric_certs.size());
  for (size_t i = 0; i < exact_certs.size(); ++i)
    CHECK(exact_certs[i].verdict == numeric_certs[i].verdict);

  // non-entangled instance across the first cut
  ExactSubspace prod = exact_span(Dims({2, 2, 2}),
                                  {{{1, {1, 1, 0}}}, {{1, {0, 0, 1}}}});
  Certificate pe = certify_ces_exact(prod, cut_of({0}, 3));
  OverlapResult pn = max_product_overlap(to_subspace(prod), cut_of({0}, 3), 40, 2);
  CHECK(pe.verdict == Verdict::ProductFound);
  CHECK(pn.lambda1 > 1.0 - 1e-10);
}

TEST_CASE("certify_ges_both merges exact and numeric evidence") {
  ExactSubspace sib = ges_3qubit_exact({{{1, 1}, {1, 1}, {1, 1}}});
  Subspace w = to_subspace(sib);
  CertifyOptions opts;
  opts.restarts = 80;
  auto certs = certify_ges_both(w, sib, opts);
  REQUIRE(certs.size() == 3);
  for (const Certificate& c : certs) {
    CHECK(c.mode == CertMode::Both);
    CHECK(c.verdict == Verdict::Entangled);
    CHECK(c.groebner == "{1} on all charts");
    REQUIRE(c.lambda1.has_value());
    CHECK(1.0 - *c.lambda1 >= 1e-6);
  }
}

TEST_CASE("two-dimensional exact verdicts match the closed-form pencil oracle") {
  // every 2-dimensional subspace of a 2x2 space contains a product vector:
  // the pencil determinant is a binary quadratic, never root-free over C
  std::vector<ExactSubspace> samples = {
      exact_span(Dims({2, 2}), {{{1, {0, 0}}}, {{1, {1, 1}}}}),
      exact_span(Dims({2, 2}), {{{1, {0, 0}}, {1, {1, 1}}}, {{1, {0, 1}}, {-1, {1, 0}}}}),
      exact_span(Dims({2, 2}), {{{2, {0, 0}}, {1, {1, 1}}}, {{1, {0, 1}}, {3, {1, 0}}}}),
  };
  for (const ExactSubspace& w : samples) {
    Certificate c = certify_ces_exact(w, cut_of({0}, 2));
    CHECK(c.verdict == Verdict::ProductFound);
  }
}

TEST_CASE("subspace entanglement of reference spaces") {
  SubspaceEntanglement ghz_se = subspace_entanglement(
      Subspace::make(Dims({2, 2, 2}), {ghz3()}), 60, 1);
  CHECK(ghz_se.g_gme == doctest::Approx(0.5).epsilon(1e-6));
  for (const auto& [cut, l] : ghz_se.per_cut_lambda1)
    CHECK(l == doctest::Approx(0.5).epsilon(1e-6));

  // the full three-qubit space reaches g = 0
  std::vector<PureState> full;
  Dims d3({2, 2, 2});
  for (int i = 0; i < 8; ++i) {
    Vector v = Vector::Zero(8);
    v[i] = 1.0;
    full.push_back(PureState::raw(d3, v));
  }
  SubspaceEntanglement full_se = subspace_entanglement(Subspace::make(d3, full), 20, 1);
  CHECK(full_se.g_gme == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("holevo-werner subspace reaches g = one half") {
  SubspaceEntanglement se = subspace_entanglement(hw_ges(), 120, 2);
  CHECK(se.g_gme == doctest::Approx(0.5).epsilon(1e-6));
  // the A|CD cut attains lambda1 = 1/2 by the schmidt data of every basis vector
  for (const PureState& b : hw_ges().basis) {
    auto s = schmidt_coefficients(b, cut_of({0}, 3));
    CHECK(s[0] * s[0] == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_SUITE_END();
