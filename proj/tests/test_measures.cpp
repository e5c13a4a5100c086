#include <doctest.h>

#include <cmath>

#include "ges/measures.hpp"
#include "helpers.hpp"

using namespace ges;
using namespace ges::test;

TEST_SUITE_BEGIN("measures");

TEST_CASE("pure-state measures on reference states") {
  Bipartition cut = cut_of({0}, 2);
  CHECK(concurrence_pure(bell(), cut) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(geometric_pure(bell(), cut) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(negativity(projector(bell()), cut) == doctest::Approx(0.5).epsilon(1e-12));

  PureState prod = state_of(Dims({2, 2}), {{1.0, {1, 0}}});
  CHECK(concurrence_pure(prod, cut) == doctest::Approx(0.0));
  CHECK(geometric_pure(prod, cut) == doctest::Approx(0.0));
  CHECK(negativity(projector(prod), cut) == doctest::Approx(0.0));

  // sqrt(1/4)|00> + sqrt(3/4)|11>
  PureState skew = state_of(Dims({2, 2}), {{std::sqrt(0.25), {0, 0}},
                                           {std::sqrt(0.75), {1, 1}}});
  CHECK(concurrence_pure(skew, cut) ==
        doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-12));       // 0.86603
  CHECK(negativity(projector(skew), cut) ==
        doctest::Approx(std::sqrt(3.0) / 4).epsilon(1e-12));       // 0.43301
  CHECK(geometric_pure(skew, cut) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("measure ranges on random pure states") {
  for (uint64_t s = 1; s <= 20; ++s) {
    PureState psi = PureState::raw(Dims({3, 3}), random_unit_vector(9, s));
    Bipartition cut = cut_of({0}, 2);
    double g = geometric_pure(psi, cut);
    double c = concurrence_pure(psi, cut);
    int d = 3;
    CHECK(g >= -1e-12);
    CHECK(g <= 1.0 - 1.0 / d + 1e-12);
    CHECK(c >= -1e-12);
    CHECK(c <= std::sqrt(2.0 * (d - 1.0) / d) + 1e-12);
  }
}

TEST_CASE("gme minima over bipartitions") {
  CHECK(gme_pure(ghz3(), MeasureKind::Geometric) == doctest::Approx(0.5).epsilon(1e-12));

  // |0> (x) Bell is biseparable: every GME measure vanishes
  PureState bisep = state_of(Dims({2, 2, 2}), {{std::sqrt(0.5), {0, 0, 0}},
                                               {std::sqrt(0.5), {0, 1, 1}}});
  CHECK(gme_pure(bisep, MeasureKind::Geometric) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(gme_pure(bisep, MeasureKind::Concurrence) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(gme_pure(bisep, MeasureKind::Negativity) == doctest::Approx(0.0).epsilon(1e-12));

  // first basis vector of the Holevo-Werner subspace: the A|CD cut attains 1/2
  PureState phi1 = hw_ges().basis[0];
  double g = gme_pure(phi1, MeasureKind::Geometric);
  CHECK(g >= 0.5 - 1e-8);
  CHECK(geometric_pure(phi1, cut_of({0}, 3)) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("gme_pure is the minimum over cuts") {
  for (uint64_t s = 1; s <= 8; ++s) {
    PureState psi = PureState::raw(Dims({2, 2, 2}), random_unit_vector(8, s));
    double m = gme_pure(psi, MeasureKind::Geometric);
    for (const Bipartition& cut : all_bipartitions(3))
      CHECK(m <= geometric_pure(psi, cut) + 1e-12);
  }
}

TEST_CASE("measures are invariant under local unitaries") {
  PureState psi = PureState::raw(Dims({2, 2, 2}), random_unit_vector(8, 77));
  PureState rot = psi;
  for (int sub = 0; sub < 3; ++sub)
    rot = apply_local_unitary(rot, random_unitary(2, 500 + static_cast<uint64_t>(sub)), sub);
  for (const Bipartition& cut : all_bipartitions(3)) {
    CHECK(geometric_pure(psi, cut) == doctest::Approx(geometric_pure(rot, cut)).epsilon(1e-8));
    CHECK(concurrence_pure(psi, cut) == doctest::Approx(concurrence_pure(rot, cut)).epsilon(1e-8));
    CHECK(negativity(projector(psi), cut) ==
          doctest::Approx(negativity(projector(rot), cut)).epsilon(1e-8));
  }
}

TEST_CASE("ppt states have zero negativity and the clamp never goes negative") {
  // separable diagonal mixture
  Dims d({2, 2});
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = 0.4; m(1, 1) = 0.1; m(2, 2) = 0.2; m(3, 3) = 0.3;
  CHECK(negativity(DensityMatrix::raw(d, m), cut_of({0}, 2)) == 0.0);
}

TEST_CASE("bipartite lower bounds from the antisymmetric subspace") {
  Subspace w = antisymmetric_subspace(3);
  DensityMatrix rho = random_density_in_span(w, 4);
  // full support: overlap 1, lambda1_bar = 1/2 -> CREN bound 1/2
  CHECK(bipartite_cren_lb(rho, w, 0.5) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(bipartite_concurrence_lb(rho, w, 0.5) ==
        doctest::Approx(std::sqrt(2.0 / 6) * 1.0).epsilon(1e-9));

  // overlap below lambda1_bar clamps to zero: maximally mixed state
  DensityMatrix mixed = DensityMatrix::raw(Dims({3, 3}), Matrix::Identity(9, 9) / 9.0);
  CHECK(overlap_with(mixed, w) == doctest::Approx(3.0 / 9).epsilon(1e-12));
  CHECK(bipartite_cren_lb(mixed, w, 0.5) == 0.0);
  CHECK(bipartite_concurrence_lb(mixed, w, 0.5) == 0.0);
  CHECK_THROWS(bipartite_cren_lb(rho, w, 1.0));
}

TEST_CASE("gme bounds against the holevo-werner subspace") {
  Subspace s = hw_ges();
  DensityMatrix supported = random_density_in_span(s, 9);
  BoundReport r = gme_bounds(supported, s, 0.5);
  CHECK(r.overlap == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(r.negativity_lb == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(r.d_used == 3);
  CHECK_FALSE(r.d_explicit);
  CHECK(r.robustness_white == doctest::Approx(0.5625));

  // boundary: overlap = 1 - g gives zero bounds
  // white-noise mixture with exactly that overlap
  double p = (1.0 - 0.5 - 3.0 / 27) / (1.0 - 3.0 / 27);
  Matrix noisy = (1 - p) * supported.matrix + p * Matrix::Identity(27, 27) / 27.0;
  BoundReport r0 = gme_bounds(DensityMatrix::raw(s.dims, noisy), s, 0.5);
  CHECK(r0.overlap == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(r0.negativity_lb == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(r0.concurrence_lb == doctest::Approx(0.0).epsilon(1e-9));

  CHECK_THROWS(gme_bounds(supported, s, 0.0));
  CHECK_THROWS(gme_bounds(supported, s, 1.0));
}

TEST_CASE("pure states in the subspace satisfy their own bound") {
  Subspace s = hw_ges();
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    PureState psi = random_in_span(s, seed);
    BoundReport r = gme_bounds(projector(psi), s, 0.5);
    double direct = gme_pure(psi, MeasureKind::Negativity);
    CHECK(direct >= r.negativity_lb - 1e-9);
    double cdirect = gme_pure(psi, MeasureKind::Concurrence);
    CHECK(cdirect >= r.concurrence_lb - 1e-9);
  }
}

TEST_CASE("gme bounds demand an explicit d when cuts disagree") {
  std::array<double, 7> half = {0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5};
  Subspace w = ges_4qubit(half);
  DensityMatrix rho = random_density_in_span(w, 3);
  CHECK_THROWS(gme_bounds(rho, w, 0.3));  // 2x8 and 4x4 cuts disagree
  BoundReport r = gme_bounds(rho, w, 0.3, 2);
  CHECK(r.d_used == 2);
  CHECK(r.d_explicit);
}

TEST_CASE("white-noise robustness") {
  CHECK(white_noise_robustness(hw_ges(), 0.5) == doctest::Approx(0.5625));  // 9/16
  // clamp at one: g = 1/2 with dim ratio 1/2
  Subspace half_space = Subspace::make(
      Dims({2, 2}), {state_of(Dims({2, 2}), {{std::sqrt(0.5), {0, 0}}, {std::sqrt(0.5), {1, 1}}}),
                     state_of(Dims({2, 2}), {{std::sqrt(0.5), {0, 1}}, {std::sqrt(0.5), {1, 0}}})});
  CHECK(white_noise_robustness(half_space, 0.5) == doctest::Approx(1.0));
  CHECK_THROWS(white_noise_robustness(half_space, 1.5));
}

TEST_CASE("spectrum robustness") {
  Subspace s = hw_ges();
  long dh = s.dims.total();
  std::vector<double> flat(static_cast<size_t>(dh), 1.0 / static_cast<double>(dh));
  CHECK(spectrum_robustness(s, 0.5, flat) ==
        doctest::Approx(white_noise_robustness(s, 0.5)).epsilon(1e-12));

  // a pure-noise spectrum (1, 0, ..., 0) gives threshold g
  std::vector<double> pure(static_cast<size_t>(dh), 0.0);
  pure[0] = 1.0;
  CHECK(spectrum_robustness(s, 0.5, pure) == doctest::Approx(0.5));

  std::vector<double> wrong_len = {1.0};
  CHECK_THROWS(spectrum_robustness(s, 0.5, wrong_len));
  std::vector<double> ascending(static_cast<size_t>(dh), 0.0);
  ascending[static_cast<size_t>(dh) - 1] = 1.0;
  CHECK_THROWS(spectrum_robustness(s, 0.5, ascending));
}

TEST_CASE("gme_bounds_auto derives g and d from the seesaw") {
  Subspace s = hw_ges();
  DensityMatrix rho = random_density_in_span(s, 21);
  BoundReport r = gme_bounds_auto(rho, s, 120, 3);
  CHECK(r.g_gme_used == doctest::Approx(0.5).epsilon(1e-5));
  CHECK(r.d_used == 3);
  CHECK(r.negativity_lb == doctest::Approx(0.5).epsilon(1e-4));
}

TEST_SUITE_END();
