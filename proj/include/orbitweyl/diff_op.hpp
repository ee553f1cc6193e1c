#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbitweyl/localized_poly.hpp"

namespace orbitweyl {

// Normal-ordered differential operator: sum of c_alpha * d^alpha with every
// coefficient to the left. No zero coefficients are stored.
class DiffOp {
 public:
  using Map = std::map<DerivMultiIndex, LocalizedPoly>;

  DiffOp() = default;

  static DiffOp identity() { return multiplication(LocalizedPoly(1)); }
  static DiffOp multiplication(const LocalizedPoly& c);
  static DiffOp derivative(int slot, int power = 1);
  static DiffOp term(const DerivMultiIndex& d, const LocalizedPoly& c);
  static DiffOp from_map(Map terms);  // drops zero coefficients

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Maximum total derivative degree; -1 for the zero operator.
  int order() const;
  // Number of (multi-index, monomial) pairs.
  std::size_t term_count() const;
  LocalizedPoly coefficient(const DerivMultiIndex& d) const;

  DiffOp operator-() const;
  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  DiffOp& operator*=(const Rational& c);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator*(DiffOp a, const Rational& c) { return a *= c; }
  friend DiffOp operator*(const Rational& c, DiffOp a) { return a *= c; }
  // Composition (a after b).
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b);

  // Left multiplication by a function: c * D.
  DiffOp left_multiply(const LocalizedPoly& c) const;

  LocalizedPoly apply(const LocalizedPoly& g) const;

  // Euler degree read off the terms (deg c - |alpha|), or nullopt when the
  // operator is not homogeneous. The zero operator has every degree.
  std::optional<int> euler_degree() const;
  std::optional<int> h_weight() const;

  std::string to_string() const;

  friend bool operator==(const DiffOp&, const DiffOp&) = default;

 private:
  Map terms_;
};

DiffOp compose(const DiffOp& a, const DiffOp& b);
DiffOp commutator(const DiffOp& a, const DiffOp& b);

// [E, D] == euler * D and [eta_h, D] == h * D as exact operator identities.
bool grading_check(const DiffOp& d, const DiffOp& euler_field, const DiffOp& eta_h,
                   int expected_euler, int expected_h_weight);

// Polynomial in the chart variables and the fiber variables xi: stored as a
// map from fiber multi-index to chart coefficient.
class SymbolPoly {
 public:
  using Map = std::map<DerivMultiIndex, LocalizedPoly>;

  SymbolPoly() = default;
  SymbolPoly(const LocalizedPoly& c);  // NOLINT: degree-0 symbol
  static SymbolPoly fiber(int slot);    // xi variable
  static SymbolPoly from_map(Map terms);

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Maximum total fiber degree; -1 for zero.
  int degree() const;
  bool is_homogeneous() const;

  SymbolPoly operator-() const;
  SymbolPoly& operator+=(const SymbolPoly& o);
  SymbolPoly& operator-=(const SymbolPoly& o);
  SymbolPoly& operator*=(const Rational& c);
  friend SymbolPoly operator+(SymbolPoly a, const SymbolPoly& b) { return a += b; }
  friend SymbolPoly operator-(SymbolPoly a, const SymbolPoly& b) { return a -= b; }
  friend SymbolPoly operator*(SymbolPoly a, const Rational& c) { return a *= c; }
  friend SymbolPoly operator*(const Rational& c, SymbolPoly a) { return a *= c; }
  friend SymbolPoly operator*(const SymbolPoly& a, const SymbolPoly& b);
  SymbolPoly pow(unsigned e) const;

  std::string to_string() const;

  friend bool operator==(const SymbolPoly&, const SymbolPoly&) = default;

 private:
  Map terms_;
};

// Top-order part of D with d^alpha replaced by xi^alpha. Throws
// std::invalid_argument for the zero operator.
SymbolPoly principal_symbol(const DiffOp& d);

}  // namespace orbitweyl
