#include "ges/rational.hpp"

#include <stdexcept>

namespace ges {

mpq_class rat(long num, long den) {
  if (den == 0) throw std::invalid_argument("rat: zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

mpq_class rat_from_string(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("rat_from_string: bad rational '" + s + "'");
  if (sgn(q.get_den()) == 0)
    throw std::invalid_argument("rat_from_string: zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rat_to_string(const mpq_class& q) { return q.get_str(); }

GRat GRat::inv() const {
  mpq_class n = re * re + im * im;
  if (sgn(n) == 0) throw std::domain_error("GRat: division by zero");
  return {re / n, -im / n};
}

std::string GRat::str() const {
  if (sgn(im) == 0) return re.get_str();
  return "(" + re.get_str() + ")+(" + im.get_str() + ")i";
}

}  // namespace ges
