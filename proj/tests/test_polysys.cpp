#include <doctest.h>

#include <complex>

#include "ges/groebner.hpp"
#include "ges/polynomial.hpp"

using namespace ges;

namespace {

Polynomial var(int nvars, int i) { return Polynomial::variable(nvars, i); }
Polynomial cnst(int nvars, long c) {
  return Polynomial::constant(nvars, GRat::integer(c));
}

// Exhaustive numeric root search for homogeneous systems in two variables:
// the projective roots of the first polynomial are closed-form; a common
// root exists iff one of them annihilates the rest. Independent of the
// Groebner path.
bool trivial_only_by_root_search(const std::vector<Polynomial>& sys) {
  using C = std::complex<double>;
  auto coeff = [](const Polynomial& p, int e0) {
    // coefficient of x^e0 * y^(deg - e0)
    for (const Term& t : p.terms())
      if (t.mono[0] == e0) return C(t.coeff.real_d(), t.coeff.imag_d());
    return C(0, 0);
  };
  const Polynomial& f = sys.front();
  int deg = f.degree();
  std::vector<std::pair<C, C>> candidates;  // projective points (x : y)
  if (deg == 2) {
    C a = coeff(f, 2), b = coeff(f, 1), c = coeff(f, 0);
    if (std::abs(a) < 1e-14 && std::abs(b) < 1e-14 && std::abs(c) < 1e-14)
      return false;  // identically zero: everything solves
    if (std::abs(a) < 1e-14) {
      candidates.push_back({C(1, 0), C(0, 0)});
      if (std::abs(b) > 1e-14) candidates.push_back({-c / b, C(1, 0)});
    } else {
      C disc = std::sqrt(b * b - 4.0 * a * c);
      candidates.push_back({(-b + disc) / (2.0 * a), C(1, 0)});
      candidates.push_back({(-b - disc) / (2.0 * a), C(1, 0)});
    }
  } else {
    return false;  // only used for quadratics here
  }
  auto value = [&](const Polynomial& p, C x, C y) {
    C sum = 0;
    for (const Term& t : p.terms()) {
      C term(t.coeff.real_d(), t.coeff.imag_d());
      for (int e = 0; e < t.mono[0]; ++e) term *= x;
      for (int e = 0; e < t.mono[1]; ++e) term *= y;
      sum += term;
    }
    return sum;
  };
  for (auto [x, y] : candidates) {
    bool common = true;
    for (const Polynomial& p : sys)
      if (std::abs(value(p, x, y)) > 1e-9) {
        common = false;
        break;
      }
    if (common) return false;  // nontrivial common root found
  }
  return true;
}

}  // namespace

TEST_SUITE_BEGIN("polysys");

TEST_CASE("monomial orders") {
  MonomialOrder grevlex{OrderKind::Grevlex};
  // x^2 > xy > y^2 > x > y > 1 in two variables under grevlex
  CHECK(grevlex.less({1, 1}, {2, 0}));
  CHECK(grevlex.less({0, 2}, {1, 1}));
  CHECK(grevlex.less({1, 0}, {0, 2}));
  CHECK(grevlex.less({0, 1}, {1, 0}));
  CHECK(grevlex.less({0, 0}, {0, 1}));
  MonomialOrder lex{OrderKind::Lex};
  CHECK(lex.less({0, 5}, {1, 0}));
  CHECK_FALSE(lex.less({1, 0}, {0, 5}));
}

TEST_CASE("gaussian rational arithmetic is exact") {
  GRat a(rat(1, 3), rat(1, 7));
  GRat b = a.inv();
  CHECK((a * b).is_one());
  GRat third(rat(1, 3));
  GRat sum;
  for (int i = 0; i < 3; ++i) sum = sum + third;
  CHECK(sum.is_one());
  CHECK(rat_from_string("-6/8") == rat(-3, 4));
  CHECK_THROWS(rat_from_string("1/0"));
}

TEST_CASE("polynomial arithmetic") {
  int n = 2;
  Polynomial x = var(n, 0), y = var(n, 1);
  Polynomial p = x * x - y * y;
  Polynomial q = (x - y) * (x + y);
  CHECK(p == q);
  CHECK(p.degree() == 2);
  CHECK(p.is_homogeneous());
  CHECK_FALSE((p + cnst(n, 1)).is_homogeneous());
  CHECK((p - p).is_zero());
  CHECK(p.substitute_one(1) == x * x - cnst(n, 1));

  std::vector<GRat> pt = {GRat::integer(3), GRat::integer(2)};
  CHECK(p.evaluate(pt) == GRat::integer(5));
}

TEST_CASE("reduction to normal form") {
  int n = 2;
  Polynomial x = var(n, 0), y = var(n, 1);
  CHECK(reduce(x * x, {x}).is_zero());
  CHECK(reduce(x + y, {x}) == y);
  // p - reduce(p, basis) lies in the ideal: re-reducing the difference gives 0
  Polynomial p = x * x * y + x * y + y;
  Polynomial r = reduce(p, {x * y - cnst(n, 1)});
  CHECK(reduce(p - r, {x * y - cnst(n, 1)}).is_zero());
}

TEST_CASE("buchberger on textbook systems") {
  int n = 1;
  Polynomial x = var(n, 0);
  // {x - 1, x + 1} is inconsistent
  auto gb = buchberger({x - cnst(n, 1), x + cnst(n, 1)});
  CHECK(is_trivial_basis(gb));

  int m = 2;
  Polynomial u = var(m, 0), v = var(m, 1);
  // already a reduced basis under grevlex
  std::vector<Polynomial> gens = {u * u, u * v, v * v};
  auto gb2 = buchberger(gens);
  REQUIRE(gb2.size() == 3);
  CHECK(gb2[0] == v * v);
  CHECK(gb2[1] == u * v);
  CHECK(gb2[2] == u * u);

  // {xy - 1, x^2}: the S-polynomial chain reaches 1
  auto gb3 = buchberger({u * v - cnst(m, 1), u * u});
  CHECK(is_trivial_basis(gb3));
}

TEST_CASE("buchberger is idempotent and reduces its inputs to zero") {
  int n = 3;
  Polynomial x = var(n, 0), y = var(n, 1), z = var(n, 2);
  std::vector<Polynomial> gens = {x * y - z * z, y * y - x * z, x * x * z - y};
  auto gb = buchberger(gens);
  auto gb2 = buchberger(gb);
  REQUIRE(gb.size() == gb2.size());
  for (size_t i = 0; i < gb.size(); ++i) CHECK(gb[i] == gb2[i]);
  for (const Polynomial& g : gens) CHECK(reduce(g, gb).is_zero());
}

TEST_CASE("s-polynomials of a groebner basis reduce to zero") {
  int n = 2;
  Polynomial x = var(n, 0), y = var(n, 1);
  auto gb = buchberger({x * x + y, x * y * y - x});
  for (size_t i = 0; i < gb.size(); ++i)
    for (size_t j = i + 1; j < gb.size(); ++j) {
      Exponents lcm = exp_lcm(gb[i].leading().mono, gb[j].leading().mono);
      Polynomial s =
          gb[i].times_monomial(exp_sub(lcm, gb[i].leading().mono),
                               gb[i].leading().coeff.inv()) -
          gb[j].times_monomial(exp_sub(lcm, gb[j].leading().mono),
                               gb[j].leading().coeff.inv());
      CHECK(reduce(s, gb).is_zero());
    }
}

TEST_CASE("only_trivial_root on the spec systems") {
  int n = 2;
  Polynomial b1 = var(n, 0), b2 = var(n, 1);
  CHECK(only_trivial_root({b1 * b1, b2 * b2, b1 * b2}));
  CHECK_FALSE(only_trivial_root({b1 * b2}));  // (1, 0) solves
  CHECK_THROWS(only_trivial_root({b1 * b1 + b2}));  // not homogeneous
}

TEST_CASE("only_trivial_root detects complex-only roots") {
  int n = 2;
  Polynomial b1 = var(n, 0), b2 = var(n, 1);
  // b1^2 + b2^2 factors over C: (1, i) is a nontrivial root
  CHECK_FALSE(only_trivial_root({b1 * b1 + b2 * b2}));
}

TEST_CASE("only_trivial_root agrees with the quadratic root-search oracle") {
  int n = 2;
  Polynomial b1 = var(n, 0), b2 = var(n, 1);
  std::vector<std::vector<Polynomial>> systems = {
      {b1 * b2},
      {b1 * b1, b2 * b2, b1 * b2},
      {b1 * b1 + b2 * b2},
      {b1 * b1 - b2 * b2, b1 * b2},
      {b1 * b1 + b1 * b2, b2 * b2},
      {b1 * b1 + b1 * b2 + b2 * b2, b1 * b2},
      {b1 * b1, b1 * b2 + b2 * b2},
  };
  for (const auto& sys : systems)
    CHECK(only_trivial_root(sys) == trivial_only_by_root_search(sys));
}

TEST_CASE("resource cap raises an explicit error") {
  int n = 3;
  Polynomial x = var(n, 0), y = var(n, 1), z = var(n, 2);
  GroebnerOptions tight;
  tight.max_reductions = 1;
  CHECK_THROWS_AS(buchberger({x * y - z * z, y * y - x * z, x * x * z - y * z * z}, tight),
                  GroebnerLimitError);
}

TEST_CASE("polynomial debug format") {
  int n = 3;
  Polynomial p = var(n, 0) * var(n, 2) * var(n, 2);
  CHECK(p.str() == "(1)*b1*b3^2");
}

TEST_SUITE_END();
