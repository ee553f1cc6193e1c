#pragma once

#include <map>
#include <string>
#include <vector>

#include "orbitweyl/exotic.hpp"
#include "orbitweyl/linalg.hpp"

namespace orbitweyl {

// Q-linear combination of monomials f_{b1} ... f_{bp} in the basis functions;
// each monomial is a sorted list of basis indices.
class OrbitFunctionExpr {
 public:
  using Monomial = std::vector<int>;

  OrbitFunctionExpr() = default;
  static OrbitFunctionExpr constant(const Rational& c);
  static OrbitFunctionExpr basis(int b, const Rational& c = 1);
  static OrbitFunctionExpr monomial(Monomial m, const Rational& c = 1);
  // Expression for f_x with x an arbitrary element.
  static OrbitFunctionExpr linear(const LieElement& x);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Degree of the monomials; -1 for zero. Throws if mixed.
  int degree() const;

  OrbitFunctionExpr& operator+=(const OrbitFunctionExpr& o);
  friend OrbitFunctionExpr operator+(OrbitFunctionExpr a, const OrbitFunctionExpr& b) { return a += b; }
  friend OrbitFunctionExpr operator*(const OrbitFunctionExpr& a, const OrbitFunctionExpr& b);
  friend OrbitFunctionExpr operator*(OrbitFunctionExpr a, const Rational& c);
  friend bool operator==(const OrbitFunctionExpr&, const OrbitFunctionExpr&) = default;

  std::string to_string(const AlgebraSpec& spec) const;

 private:
  std::map<Monomial, Rational> terms_;
};

// f_b -> -f_{sigma(b)}, extended multiplicatively and linearly.
OrbitFunctionExpr conjugate_expr(const AlgebraSpec& spec, const OrbitFunctionExpr& f);

// Chart expansion as a Laurent polynomial.
LocalizedPoly chart_expand(const Chart& chart, const OrbitFunctionExpr& f);

// f_{b1} ... f_{bp} -> D_{b1} o ... o D_{bp}, extended linearly.
DiffOp lift_to_operator(const ExoticFamily& family, const OrbitFunctionExpr& f);
// lift_to_operator(f) applied to g, one factor at a time.
LocalizedPoly apply_lift(const ExoticFamily& family, const OrbitFunctionExpr& f, const LocalizedPoly& g);

// (f|g) = constant term of D_{conj g}(f). Throws std::logic_error if the
// degree-0 result is not a constant.
Rational pairing(const Chart& chart, const ExoticFamily& family, const LocalizedPoly& f, const OrbitFunctionExpr& g);
Rational pairing(const Chart& chart, const ExoticFamily& family, const OrbitFunctionExpr& f,
                 const OrbitFunctionExpr& g);

// All degree-p monomials in the basis functions, lexicographic.
std::vector<OrbitFunctionExpr::Monomial> degree_monomials(int dim, int p);

// Writes a function of Euler degree p as a combination of degree-p
// monomials. Throws std::logic_error if it is outside their span.
OrbitFunctionExpr express_in_monomials(const Chart& chart, const LocalizedPoly& f, int p);

struct GramResult {
  int degree = 0;
  std::vector<OrbitFunctionExpr::Monomial> monomials;
  Matrix matrix;
  bool symmetric = false;
  LdlResult ldl;
  int oracle_rank = -1;
  // Every relation among the monomials (a vector in the kernel of the
  // evaluation matrix) lies in the kernel of the Gram matrix.
  bool relations_in_kernel = false;
  // PSD and rank equal to the oracle rank: positive definite on R_p.
  bool positive_on_quotient = false;

  std::string to_csv() const;
};

// Gram matrix of the pairing on degree-p monomials, computed recursively:
// (f | f_b g') = s (D_c f | g') where conj(f_b) = s f_c and D_c f in R_{p-1}
// is decomposed over the degree-(p-1) monomials.
GramResult gram_matrix(const Chart& chart, const ExoticFamily& family, int p, std::uint64_t seed);

// Rank of the evaluation matrix of the degree-p monomials at random orbit
// points; `relations` receives a basis of the linear relations.
int evaluation_rank(const AlgebraSpec& spec, const std::vector<OrbitFunctionExpr::Monomial>& monomials,
                    std::uint64_t seed, Matrix* relations = nullptr);

}  // namespace orbitweyl
