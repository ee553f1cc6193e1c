#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "orbitweyl/monomial.hpp"
#include "orbitweyl/rational.hpp"

namespace orbitweyl {

enum class Grading { euler, h_weight };

// Element of Q[f0^{+-1}, fp0, f1, fp1, ...]: terms sorted by monomial, no zero
// coefficients, at most one term per monomial.
class LocalizedPoly {
 public:
  using Term = std::pair<ChartMonomial, Rational>;

  LocalizedPoly() = default;
  LocalizedPoly(const Rational& c);  // NOLINT: constants convert implicitly
  LocalizedPoly(long c) : LocalizedPoly(Rational(c)) {}  // NOLINT

  static LocalizedPoly variable(int slot, int power = 1);
  static LocalizedPoly monomial(const ChartMonomial& m, const Rational& c = 1);
  // Accepts unsorted terms with repeats and zeros.
  static LocalizedPoly from_terms(std::vector<Term> terms);
  // Caller guarantees the canonical invariants.
  static LocalizedPoly from_sorted_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;          // zero counts as constant
  Rational constant_term() const;    // coefficient of the unit monomial
  Rational coefficient(const ChartMonomial& m) const;

  LocalizedPoly operator-() const;
  LocalizedPoly& operator+=(const LocalizedPoly& o);
  LocalizedPoly& operator-=(const LocalizedPoly& o);
  LocalizedPoly& operator*=(const Rational& c);
  friend LocalizedPoly operator+(LocalizedPoly a, const LocalizedPoly& b) { return a += b; }
  friend LocalizedPoly operator-(LocalizedPoly a, const LocalizedPoly& b) { return a -= b; }
  friend LocalizedPoly operator*(const LocalizedPoly& a, const LocalizedPoly& b);
  friend LocalizedPoly operator*(LocalizedPoly a, const Rational& c) { return a *= c; }
  friend LocalizedPoly operator*(const Rational& c, LocalizedPoly a) { return a *= c; }

  // Product with c * m; keeps the term order, so it is a cheap shift.
  LocalizedPoly times_monomial(const ChartMonomial& m, const Rational& c = 1) const;
  LocalizedPoly pow(unsigned e) const;

  LocalizedPoly partial(int slot) const;
  LocalizedPoly partial(const DerivMultiIndex& d) const;

  // Throws std::domain_error when the f0 value is zero.
  Rational eval(const std::vector<Rational>& point) const;

  std::map<int, LocalizedPoly> grade_split(Grading kind) const;

  std::string to_string() const;

  friend bool operator==(const LocalizedPoly&, const LocalizedPoly&) = default;

 private:
  std::vector<Term> terms_;
};

// Hash-map accumulator for building polynomials out of many products.
class PolyAccumulator {
 public:
  void add(const ChartMonomial& m, const Rational& c);
  void add_product(const ChartMonomial& m, const Rational& a, const Rational& b);
  void add_scaled(const LocalizedPoly& p, const Rational& c);
  void add_scaled(const LocalizedPoly& p, const Rational& c, const ChartMonomial& shift);
  void add_product(const LocalizedPoly& a, const LocalizedPoly& b, const Rational& c = 1);
  bool empty() const { return map_.empty(); }
  LocalizedPoly take();

 private:
  std::unordered_map<ChartMonomial, Rational, ExponentsHash<ChartTag>> map_;
  Rational scratch_;
};

std::string to_string(const LocalizedPoly& p);

// Returns c with a == c * b, or nullopt when a is not a scalar multiple of b.
// b must be non-zero.
std::optional<Rational> scalar_multiple(const LocalizedPoly& a, const LocalizedPoly& b);

// Shared by the text formats: prints coefficient c times the factor string
// `body` ("" means the unit) as a term, with a leading sign handled by caller.
std::string format_term(const Rational& c, const std::string& body, bool first);

}  // namespace orbitweyl
