#pragma once

#include <gmpxx.h>

#include <string>

namespace orbitweyl {

// Exact rational scalar. mpq_class keeps values canonical (reduced, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;

// Builds num/den in canonical form. Throws std::invalid_argument when den == 0.
Rational make_rational(long num, long den = 1);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

// r^e for any integer e; throws std::domain_error for 0^e with e < 0.
Rational power(const Rational& r, int e);

// Parses "p" or "p/q".
Rational parse_rational(const std::string& text);

}  // namespace orbitweyl
