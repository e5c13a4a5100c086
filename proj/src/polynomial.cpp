#include "ges/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ges {

int total_degree(const Exponents& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents exp_add(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Exponents exp_sub(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i] - b[i];
    if (out[i] < 0) throw std::invalid_argument("exp_sub: negative exponent");
  }
  return out;
}

Exponents exp_lcm(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

bool exp_coprime(const Exponents& a, const Exponents& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

bool MonomialOrder::less(const Exponents& a, const Exponents& b) const {
  if (kind == OrderKind::Lex) {
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
  // grevlex: compare total degree, then the last differing exponent reversed
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

Polynomial Polynomial::zero(int nvars, MonomialOrder order) {
  return Polynomial(nvars, order);
}

Polynomial Polynomial::constant(int nvars, const GRat& c, MonomialOrder order) {
  Polynomial p(nvars, order);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int nvars, int var, MonomialOrder order) {
  if (var < 0 || var >= nvars)
    throw std::invalid_argument("Polynomial::variable out of range");
  Polynomial p(nvars, order);
  Exponents e(nvars, 0);
  e[var] = 1;
  p.add_term(e, GRat::integer(1));
  return p;
}

void Polynomial::add_term(const Exponents& mono, const GRat& c) {
  if (static_cast<int>(mono.size()) != nvars_)
    throw std::invalid_argument("Polynomial: exponent arity mismatch");
  if (c.is_zero()) return;
  // descending order: find insertion point
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), mono,
      [this](const Term& t, const Exponents& m) { return order_.less(m, t.mono); });
  if (it != terms_.end() && it->mono == mono) {
    it->coeff = it->coeff + c;
    if (it->coeff.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, Term{mono, c});
  }
}

bool Polynomial::is_constant() const {
  return terms_.size() == 1 && total_degree(terms_[0].mono) == 0;
}

Polynomial Polynomial::tail() const {
  Polynomial out(nvars_, order_);
  if (terms_.size() > 1) out.terms_.assign(terms_.begin() + 1, terms_.end());
  return out;
}

int Polynomial::degree() const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, total_degree(t.mono));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = total_degree(terms_[0].mono);
  for (const Term& t : terms_)
    if (total_degree(t.mono) != d) return false;
  return true;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (nvars_ != o.nvars_ || !(order_ == o.order_))
    throw std::invalid_argument("Polynomial: mixed variable sets or orders");
  Polynomial out(nvars_, order_);
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() ||
        (i < terms_.size() && order_.less(o.terms_[j].mono, terms_[i].mono))) {
      out.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || order_.less(terms_[i].mono, o.terms_[j].mono)) {
      out.terms_.push_back(o.terms_[j++]);
    } else {
      GRat c = terms_[i].coeff + o.terms_[j].coeff;
      if (!c.is_zero()) out.terms_.push_back(Term{terms_[i].mono, c});
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + o.scaled(GRat::integer(-1));
}

Polynomial Polynomial::scaled(const GRat& c) const {
  Polynomial out(nvars_, order_);
  if (c.is_zero()) return out;
  out.terms_ = terms_;
  for (Term& t : out.terms_) t.coeff = t.coeff * c;
  return out;
}

Polynomial Polynomial::times_monomial(const Exponents& m, const GRat& c) const {
  Polynomial out(nvars_, order_);
  if (c.is_zero()) return out;
  out.terms_ = terms_;
  for (Term& t : out.terms_) {
    t.mono = exp_add(t.mono, m);
    t.coeff = t.coeff * c;
  }
  return out;  // shifting by a fixed monomial preserves the term order
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (nvars_ != o.nvars_ || !(order_ == o.order_))
    throw std::invalid_argument("Polynomial: mixed variable sets or orders");
  Polynomial out(nvars_, order_);
  for (const Term& t : o.terms_) {
    Polynomial part = times_monomial(t.mono, t.coeff);
    out = out + part;
  }
  return out;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().coeff.inv());
}

Polynomial Polynomial::substitute_one(int var) const {
  if (var < 0 || var >= nvars_)
    throw std::invalid_argument("substitute_one: variable out of range");
  Polynomial out(nvars_, order_);
  for (const Term& t : terms_) {
    Exponents m = t.mono;
    m[var] = 0;
    out.add_term(m, t.coeff);
  }
  return out;
}

GRat Polynomial::evaluate(const std::vector<GRat>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw std::invalid_argument("evaluate: point arity mismatch");
  GRat sum;
  for (const Term& t : terms_) {
    GRat prod = t.coeff;
    for (int v = 0; v < nvars_; ++v)
      for (int e = 0; e < t.mono[v]; ++e) prod = prod * point[v];
    sum = sum + prod;
  }
  return sum;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) ||
        !(terms_[i].coeff == o.terms_[i].coeff))
      return false;
  return true;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << t.coeff.str() << ")";
    for (int v = 0; v < nvars_; ++v) {
      if (t.mono[v] == 0) continue;
      os << "*";
      if (v < static_cast<int>(names.size()))
        os << names[v];
      else
        os << "b" << (v + 1);
      if (t.mono[v] > 1) os << "^" << t.mono[v];
    }
  }
  return os.str();
}

}  // namespace ges
