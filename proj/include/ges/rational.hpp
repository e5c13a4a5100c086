#ifndef GES_RATIONAL_HPP
#define GES_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace ges {

/// Canonical rational from an integer pair (denominator forced positive,
/// gcd reduced).
mpq_class rat(long num, long den = 1);

/// Parses "p", "-p/q" etc.
mpq_class rat_from_string(const std::string& s);

std::string rat_to_string(const mpq_class& q);

/// Complex number with exact rational real and imaginary parts. Forms a
/// field, so polynomial division over it is exact.
struct GRat {
  mpq_class re, im;

  GRat() : re(0), im(0) {}
  GRat(const mpq_class& r) : re(r), im(0) {}
  GRat(const mpq_class& r, const mpq_class& i) : re(r), im(i) {}
  static GRat integer(long n) { return GRat(rat(n)); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_one() const { return re == 1 && sgn(im) == 0; }
  GRat conj() const { return {re, -im}; }
  GRat inv() const;

  GRat operator+(const GRat& o) const { return {re + o.re, im + o.im}; }
  GRat operator-(const GRat& o) const { return {re - o.re, im - o.im}; }
  GRat operator-() const { return {-re, -im}; }
  GRat operator*(const GRat& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GRat operator/(const GRat& o) const { return *this * o.inv(); }
  bool operator==(const GRat& o) const { return re == o.re && im == o.im; }

  double real_d() const { return re.get_d(); }
  double imag_d() const { return im.get_d(); }
  std::string str() const;
};

}  // namespace ges

#endif
