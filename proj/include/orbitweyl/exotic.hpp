#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "orbitweyl/chart.hpp"

namespace orbitweyl {

// q(E) = c[0] + c[1] E + c[2] E^2.
struct CorrectionPoly {
  std::array<Rational, 3> c{};

  Rational operator()(const Rational& k) const { return c[0] + c[1] * k + c[2] * k * k; }
  int degree() const;
  std::string to_string() const;  // polynomial in E, e.g. "E^2 + E + 1/4"
  friend bool operator==(const CorrectionPoly&, const CorrectionPoly&) = default;
};

// Closed forms: sl (E + m/2)^2, so (E + m/2 + 1)(E + m/2 - 1).
CorrectionPoly expected_q(const AlgebraSpec& spec);
// D0(f_psi^k) = gamma(k) f_psi^(k-1): sl alpha_k = k^2 (k + (m-1)/2)(k + m/2),
// so beta_k = k (k+1)(k + m/2 - 1)(k + m/2 - 1/2).
Rational expected_gamma(const AlgebraSpec& spec, int k);
// A(f_psi^k) = -t_k a f_psi^(k-1) / f0: sl k (k + m/2), so k (k + m/2 - 1).
Rational expected_t(const AlgebraSpec& spec, int k);

struct QSolveResult {
  bool ok = false;
  CorrectionPoly q;
  std::vector<Rational> samples;  // q(k) for k = 2..max_k
  std::vector<Rational> gammas;   // S(f_psi^k) = gamma_k f0 f_psi^(k-1)
  int failing_k = -1;
  std::string error;
  LocalizedPoly residual;
};

// Builds A (and B, C for so), S and D0 on a chart.
class ExoticBuilder {
 public:
  explicit ExoticBuilder(const Chart& chart);

  const Chart& chart() const { return chart_; }
  const DiffOp& A() const { return A_; }
  const DiffOp& B() const;  // throws std::invalid_argument for sl
  const DiffOp& C() const;

  // A^2 (sl) or A^2 + 2BC + 2CB (so).
  DiffOp main_term() const;
  LocalizedPoly apply_main(const LocalizedPoly& g) const;
  DiffOp q_operator(const CorrectionPoly& q) const;  // q(E)
  DiffOp build_S(const CorrectionPoly& q) const;
  // f0^{-1} * S (left multiplication).
  DiffOp build_D0(const CorrectionPoly& q) const;

  // Solves for q(k), k = 2..max_k, from main(f_psi^k) - q(k)(eta^{x0})^2 f_psi^k
  // being a multiple of f0 f_psi^(k-1), then interpolates.
  QSolveResult solve_q(int max_k) const;
  // main(f_psi^k) - (q(k) + shift)(eta^{x0})^2 f_psi^k minus its best multiple
  // of f0 f_psi^(k-1): zero exactly when q(k) + shift is admissible.
  LocalizedPoly divisibility_defect(const CorrectionPoly& q, int k, const Rational& shift) const;

  // Principal symbols: Theta of the coordinate of `slot`, lambda, Phi^{x0}.
  SymbolPoly theta(int slot) const;
  SymbolPoly lambda() const;
  SymbolPoly phi_x0() const;
  // Substitutes Theta for the w-variables of a polynomial in slots 2..2m+1.
  SymbolPoly substitute_theta(const LocalizedPoly& p) const;
  // r0 = f0^{-1} (P(Theta) - 1/4 lambda^2 (Phi^{x0})^2).
  SymbolPoly r0() const;

 private:
  const Chart& chart_;
  DiffOp A_, B_, C_;
};

// gamma(k) with D0(f_psi^k) = gamma(k) f_psi^(k-1) for k = 0..k_max, or the
// first k where the image is not such a multiple.
struct EigenResult {
  std::vector<Rational> values;
  int failing_k = -1;
};
EigenResult eigenvalue_sequence(const Chart& chart, const DiffOp& d0, int k_max);

// Degree-4 interpolant of the sequence (k, gamma(k)), coefficients c0..c4.
std::vector<Rational> interpolate(const std::vector<Rational>& values, int degree);

struct FamilyMember {
  LieElement x;
  DiffOp op;
  std::vector<int> path;  // generator basis indices applied to x0, in order
};

struct ExoticFamily {
  AlgebraPtr spec;
  std::vector<FamilyMember> members;  // independent elements reached by the closure
  std::vector<DiffOp> by_basis;       // D_{e_b} for every basis element
  int span_dim = 0;
  bool path_independent = true;
  bool ok = false;
  std::string error;

  DiffOp op(const LieElement& x) const;
};

// Closure of (x0, D0) under (x, D) -> ([y, x], [eta^y, D]) for all basis y.
ExoticFamily generate_family(const Chart& chart, const DiffOp& d0);

}  // namespace orbitweyl
