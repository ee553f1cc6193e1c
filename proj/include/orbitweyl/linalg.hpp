#pragma once

#include <map>
#include <optional>
#include <vector>

#include "orbitweyl/rational.hpp"

namespace orbitweyl {

using Matrix = std::vector<std::vector<Rational>>;

// Exact rank by Gaussian elimination.
int rank(Matrix rows);

// Some solution x of A x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b);

// Basis of the right kernel {x : A x = 0}; `ncols` is needed when A is empty.
Matrix nullspace(const Matrix& a, std::size_t ncols);

// Incremental span over Q of sparse vectors keyed by Key. Each added vector
// is either independent of the previous ones or expressed through them.
template <class Key>
class SpanTracker {
 public:
  using Vec = std::map<Key, Rational>;

  // Index of the new generator, or nullopt (with `coeffs` filled) when v is
  // already in the span.
  std::optional<int> add(const Vec& v, std::vector<Rational>* coeffs = nullptr);
  // Coefficients over the generators, nullopt when v is outside the span.
  std::optional<std::vector<Rational>> express(const Vec& v) const;
  int size() const { return static_cast<int>(rows_.size()); }

 private:
  struct Row {
    Key pivot;
    Vec vec;                     // reduced vector, pivot coefficient 1
    std::vector<Rational> comb;  // vec = sum comb[j] * generator_j
  };
  // Reduces v against the rows; returns the residual and the combination c
  // such that v = residual + sum c[j] generator_j.
  Vec reduce(Vec v, std::vector<Rational>& comb) const;
  std::vector<Row> rows_;
};

struct LdlResult {
  bool psd = false;
  int rank = 0;
  std::vector<Rational> pivots;
  // Vector x with x^T M x < 0 when psd is false.
  std::vector<Rational> witness;
};

// Exact symmetric pivoting decomposition of a symmetric matrix. A zero pivot
// whose remaining row is non-zero, or a negative pivot, certifies that M is
// not positive semidefinite.
LdlResult ldl_psd(const Matrix& m);

Rational quadratic_form(const Matrix& m, const std::vector<Rational>& x);

}  // namespace orbitweyl
