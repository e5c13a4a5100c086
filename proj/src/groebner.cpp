#include "ges/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace ges {

Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& basis) {
  Polynomial cur = p;
  Polynomial rem(p.nvars(), p.order());
  while (!cur.is_zero()) {
    const Term& lt = cur.leading();
    bool divided = false;
    for (const Polynomial& g : basis) {
      if (g.is_zero()) continue;
      const Term& gl = g.leading();
      if (divides(gl.mono, lt.mono)) {
        cur = cur - g.times_monomial(exp_sub(lt.mono, gl.mono),
                                     lt.coeff / gl.coeff);
        divided = true;
        break;
      }
    }
    if (!divided) {
      rem.add_term(lt.mono, lt.coeff);
      cur = cur.tail();
    }
  }
  return rem;
}

namespace {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  Exponents l = exp_lcm(f.leading().mono, g.leading().mono);
  Polynomial a = f.times_monomial(exp_sub(l, f.leading().mono),
                                  f.leading().coeff.inv());
  Polynomial b = g.times_monomial(exp_sub(l, g.leading().mono),
                                  g.leading().coeff.inv());
  return a - b;
}

std::vector<Polynomial> reduced_form(std::vector<Polynomial> g) {
  // minimal: drop elements whose leading term another one divides
  std::vector<bool> keep(g.size(), true);
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j) {
      if (i == j || !keep[i] || !keep[j]) continue;
      if (divides(g[j].leading().mono, g[i].leading().mono)) {
        // on equal leading monomials keep the earlier element
        if (g[i].leading().mono == g[j].leading().mono && i < j) continue;
        keep[i] = false;
      }
    }
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < g.size(); ++i)
    if (keep[i]) minimal.push_back(g[i]);

  // tail-reduce each against the others
  std::vector<Polynomial> out;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial r = reduce(minimal[i], others);
    if (!r.is_zero()) out.push_back(r.monic());
  }
  std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
    return a.order().less(a.leading().mono, b.leading().mono);
  });
  return out;
}

}  // namespace

std::vector<Polynomial> buchberger(std::vector<Polynomial> gens,
                                   const GroebnerOptions& opts) {
  std::vector<Polynomial> g;
  for (const Polynomial& p : gens)
    if (!p.is_zero()) g.push_back(p.monic());
  if (g.empty()) return {};

  int nvars = g[0].nvars();
  MonomialOrder order = g[0].order();
  for (const Polynomial& p : g)
    if (p.nvars() != nvars || !(p.order() == order))
      throw std::invalid_argument("buchberger: mixed variable sets or orders");

  for (const Polynomial& p : g)
    if (p.is_constant())
      return {Polynomial::constant(nvars, GRat::integer(1), order)};

  // pair queue ordered by lcm total degree (normal strategy)
  using PairKey = std::tuple<int, size_t, size_t>;
  std::set<PairKey> pairs;
  auto add_pairs = [&](size_t t) {
    for (size_t i = 0; i < t; ++i)
      pairs.insert({total_degree(exp_lcm(g[i].leading().mono, g[t].leading().mono)), i, t});
  };
  for (size_t t = 1; t < g.size(); ++t) add_pairs(t);

  long reductions = 0;
  while (!pairs.empty()) {
    auto [deg, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    if (exp_coprime(g[i].leading().mono, g[j].leading().mono)) continue;
    if (++reductions > opts.max_reductions)
      throw GroebnerLimitError("buchberger: S-pair reduction cap exceeded");
    Polynomial r = reduce(s_polynomial(g[i], g[j]), g);
    if (r.is_zero()) continue;
    r = r.monic();
    if (r.is_constant())
      return {Polynomial::constant(nvars, GRat::integer(1), order)};
    g.push_back(std::move(r));
    add_pairs(g.size() - 1);
  }
  return reduced_form(std::move(g));
}

bool is_trivial_basis(const std::vector<Polynomial>& basis) {
  return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero();
}

bool only_trivial_root(const std::vector<Polynomial>& polys,
                       const GroebnerOptions& opts) {
  std::vector<Polynomial> sys;
  for (const Polynomial& p : polys)
    if (!p.is_zero()) sys.push_back(p);
  if (sys.empty()) return false;  // no constraints: every point solves

  int nvars = sys[0].nvars();
  int deg = sys[0].degree();
  for (const Polynomial& p : sys) {
    if (!p.is_homogeneous() || p.degree() != deg)
      throw std::invalid_argument("only_trivial_root: system must be homogeneous of equal degree");
    if (p.nvars() != nvars)
      throw std::invalid_argument("only_trivial_root: mixed variable sets");
  }

  // The projective variety is empty iff every affine chart var_k = 1 carries
  // no solution, i.e. its Groebner basis is {1}.
  for (int k = 0; k < nvars; ++k) {
    std::vector<Polynomial> chart;
    chart.reserve(sys.size());
    for (const Polynomial& p : sys) chart.push_back(p.substitute_one(k));
    if (!is_trivial_basis(buchberger(std::move(chart), opts))) return false;
  }
  return true;
}

}  // namespace ges
