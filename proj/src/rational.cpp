#include "orbitweyl/rational.hpp"

#include <stdexcept>

namespace orbitweyl {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational power(const Rational& r, int e) {
  if (e < 0) {
    if (sgn(r) == 0) throw std::domain_error("zero raised to a negative power");
    return power(Rational(1) / r, -e);
  }
  Rational result(1);
  Rational base = r;
  unsigned u = static_cast<unsigned>(e);
  while (u) {
    if (u & 1u) result *= base;
    u >>= 1u;
    if (u) base *= base;
  }
  return result;
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0 || r.get_den() == 0)
    throw std::invalid_argument("not a rational: " + text);
  r.canonicalize();
  return r;
}

}  // namespace orbitweyl
