#ifndef GES_GROEBNER_HPP
#define GES_GROEBNER_HPP

#include <stdexcept>
#include <vector>

#include "ges/polynomial.hpp"

namespace ges {

struct GroebnerOptions {
  long max_reductions = 1'000'000;  // S-pair reduction cap
};

/// Raised when the S-pair reduction cap is exceeded.
class GroebnerLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reduced Groebner basis by Buchberger's algorithm (normal pair-selection
/// strategy, coprime-leading-term criterion). Leading coefficients are 1.
std::vector<Polynomial> buchberger(std::vector<Polynomial> gens,
                                   const GroebnerOptions& opts = {});

/// Normal form of p modulo the basis: no remaining term is divisible by any
/// leading term of the basis.
Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& basis);

bool is_trivial_basis(const std::vector<Polynomial>& basis);

/// For a homogeneous system: true iff beta = 0 is the only complex solution,
/// decided chart by chart (each variable set to 1 in turn must yield the
/// basis {1}).
bool only_trivial_root(const std::vector<Polynomial>& polys,
                       const GroebnerOptions& opts = {});

}  // namespace ges

#endif
