#ifndef GES_POLYNOMIAL_HPP
#define GES_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "ges/rational.hpp"

namespace ges {

using Exponents = std::vector<int>;

enum class OrderKind { Grevlex, Lex };

/// Total, multiplicative, well-founded monomial order.
struct MonomialOrder {
  OrderKind kind = OrderKind::Grevlex;

  bool less(const Exponents& a, const Exponents& b) const;
  bool equal(const Exponents& a, const Exponents& b) const { return a == b; }

  bool operator==(const MonomialOrder&) const = default;
};

int total_degree(const Exponents& e);
bool divides(const Exponents& a, const Exponents& b);       // a | b
Exponents exp_add(const Exponents& a, const Exponents& b);
Exponents exp_sub(const Exponents& a, const Exponents& b);  // requires a >= b
Exponents exp_lcm(const Exponents& a, const Exponents& b);
bool exp_coprime(const Exponents& a, const Exponents& b);

struct Term {
  Exponents mono;
  GRat coeff;
};

/// Multivariate polynomial over the Gaussian rationals. Terms are kept
/// sorted in strictly decreasing monomial order with no zero coefficients.
class Polynomial {
 public:
  Polynomial(int nvars, MonomialOrder order) : nvars_(nvars), order_(order) {}

  static Polynomial zero(int nvars, MonomialOrder order = {});
  static Polynomial constant(int nvars, const GRat& c, MonomialOrder order = {});
  static Polynomial variable(int nvars, int var, MonomialOrder order = {});

  /// Merges a term in, dropping it if the combined coefficient vanishes.
  void add_term(const Exponents& mono, const GRat& c);

  int nvars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  Polynomial tail() const;  // polynomial minus its leading term
  int degree() const;
  bool is_homogeneous() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const GRat& c) const;
  Polynomial times_monomial(const Exponents& m, const GRat& c) const;
  Polynomial monic() const;

  /// Sets one variable to 1 (chart dehomogenization) and recombines terms.
  Polynomial substitute_one(int var) const;

  GRat evaluate(const std::vector<GRat>& point) const;

  bool operator==(const Polynomial& o) const;

  /// Debug dump, e.g. "(1/2)+(0)i*b1^2*b3". Not a stability surface.
  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  int nvars_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

}  // namespace ges

#endif
