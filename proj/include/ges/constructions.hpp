#ifndef GES_CONSTRUCTIONS_HPP
#define GES_CONSTRUCTIONS_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "ges/channels.hpp"
#include "ges/exact.hpp"
#include "ges/tensor.hpp"
#include "ges/types.hpp"

namespace ges {

/// Orthonormal family of states sharing one dimension list.
struct Subspace {
  Dims dims;
  std::vector<PureState> basis;
  std::vector<std::string> provenance;  // one note per basis vector

  static Subspace make(Dims dims, std::vector<PureState> basis,
                       std::vector<std::string> provenance = {});
  int dimension() const { return static_cast<int>(basis.size()); }
};

Matrix gram(const Subspace& w);
Matrix projector_onto(const Subspace& w);
Subspace to_subspace(const ExactSubspace& w);

/// Largest dimension a completely entangled subspace of d1 (x) d2 can have.
int max_ces_dim(int d1, int d2);
/// Min of max_ces_dim over all canonical bipartitions of a multipartite space.
int max_ges_dim(const Dims& dims);

using RatioPair = std::pair<long, long>;

// ---- bipartite families ---------------------------------------------------

/// Four orthonormal vectors in 3 (x) 3, each sqrt(l)|ab> + sqrt(1-l)|cd>.
Subspace ces_3x3(const std::array<double, 4>& lambda);
ExactSubspace ces_3x3_exact(const std::array<RatioPair, 4>& ratios);

/// (|ij> - |ji>)/sqrt(2), i < j.
Subspace antisymmetric_subspace(int d);
ExactSubspace antisymmetric_subspace_exact(int d);

/// Seven orthonormal vectors in 4 (x) 4 saturating the dimension bound.
Subspace ces_4x4(const std::array<double, 7>& lambda);
ExactSubspace ces_4x4_exact(const std::array<RatioPair, 7>& ratios);

/// The 16 -> 12 -> ... Kraus data behind ces_3x3 (three 3x4 operators) and
/// ces_4x4 (four 4x7 operators), for pipeline cross-checks.
KrausChannel ces_3x3_channel(const std::array<double, 4>& lambda);
ExactKraus ces_3x3_channel_exact(const std::array<RatioPair, 4>& ratios);
KrausChannel ces_4x4_channel(const std::array<double, 7>& lambda);

/// The two-Kraus 3 -> 4 channel behind the three-qubit family.
KrausChannel three_qubit_channel(const std::array<double, 3>& lambda);
ExactKraus three_qubit_channel_exact(const std::array<RatioPair, 3>& ratios);

// ---- multipartite families ------------------------------------------------

/// Applies an isometry to one party of every basis vector, splitting that
/// party in two. Preserves the Gram matrix; the caller certifies that the
/// isometry's channel has output purity below one.
Subspace lift_ges(const Subspace& ces, const Isometry& v, int party);

Subspace ges_3qubit(double l1, double l2, double l3);
ExactSubspace ges_3qubit_exact(const std::array<RatioPair, 3>& ratios);

/// Maximal three-qubit family orthogonal to ges_3qubit at equal parameters.
Subspace ges_3qubit_orthogonal(double l1, double l2, double l3);
ExactSubspace ges_3qubit_orthogonal_exact(const std::array<RatioPair, 3>& ratios);

Subspace ges_4qubit(const std::array<double, 7>& lambda);
ExactSubspace ges_4qubit_exact(const std::array<RatioPair, 7>& ratios);

/// Antisymmetric 3 (x) 3 subspace pushed through the Holevo-Werner isometry:
/// a three-qutrit GES with geometric GME measure 1/2.
Subspace hw_ges();
ExactSubspace hw_ges_exact();

// ---- three-qutrit construction ---------------------------------------------

/// Three rank-one PSD operators on C^2 summing to the identity.
struct PovmTriple {
  double alpha = 0.0;
  Matrix p1, p2, p3;
};
PovmTriple povm_triple(double alpha);

/// Layout of the three 9x16 Kraus operators: five 2x2 POVM blocks (their
/// angles and the per-block assignment of POVM elements to Kraus slots), six
/// tail diagonal rows (values per Kraus, nonzeros summing to 1), and the
/// three row permutations.
struct QutritLayout {
  std::array<double, 5> alpha{};
  std::array<std::array<int, 3>, 5> slot{};   // slot[j][i] in {0,1,2}
  std::array<std::array<double, 3>, 6> diag{};
  std::array<std::array<int, 9>, 3> perm{};   // row r of Kraus i lands at perm[i][r]

  static QutritLayout paper_values();
  void validate() const;  // counting argument + row sums + permutation checks
};

struct QutritConstruction {
  KrausChannel channel;  // 16 -> 9
  Isometry isometry;
  Subspace ces;        // [9,3] spanning set
  Subspace mixed_ces;  // after the three-level mixing unitary
  Subspace ges;        // [3,3,3], 16 vectors
};

QutritConstruction ges_3qutrit_full(const QutritLayout& layout);
Subspace ges_3qutrit();
/// Rational in-family sibling: block angle atan(1/2) (coefficient triple
/// (2/3, 1/3, 2/3)) and integer ratios for the six tail rows.
ExactSubspace ges_3qutrit_exact(
    const std::array<RatioPair, 6>& ratios = {{{1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}}});

// ---- building blocks exposed for tests and pipelines ------------------------

/// 4x4 unitary mixing levels 1 and 2 of a four-level system.
Matrix pair_mixer4();
/// The two 4x4 mixers entering the four-qubit factorization schemes.
Matrix four_qubit_mixer_a();  // Q*T
Matrix four_qubit_mixer_b();  // T
/// 9x9 unitary mixing levels {2,5,6}.
Matrix three_level_mixer9();

FactorizationScheme scheme_pair_split(int subsystem);      // 4 -> 2x2, identity relabeling
FactorizationScheme scheme_four_qubit_a(int subsystem);    // pair split preceded by Q*T
FactorizationScheme scheme_four_qubit_b(int subsystem);    // pair split preceded by T
FactorizationScheme scheme_qutrit_split(int subsystem);    // 9 -> 3x3 relabeling
ExactMat exact_pair_mixer_a();                             // rational Q*T
ExactMat exact_pair_mixer_b();                             // rational T
ExactMat exact_three_level_mixer9();

/// Antisymmetric-range isometry of one qutrit into two (basis to singlets).
Isometry antisym_qutrit_isometry();

}  // namespace ges

#endif
