#pragma once

#include <random>
#include <vector>

#include "orbitweyl/diff_op.hpp"
#include "orbitweyl/lie_model.hpp"

namespace orbitweyl {

// The chart f0 != 0 on the minimal orbit: orbit functions of every basis
// element as Laurent polynomials in f0, fp0, f_i, fp_i, and the vector fields
// eta^y. Immutable once constructed.
class Chart {
 public:
  explicit Chart(AlgebraPtr spec);

  const AlgebraSpec& spec() const { return *spec_; }
  const AlgebraPtr& spec_ptr() const { return spec_; }
  int slots() const { return spec_->chart_slots(); }

  const LocalizedPoly& basis_function(int i) const { return functions_.at(static_cast<std::size_t>(i)); }
  LocalizedPoly orbit_function(const LieElement& y) const;
  const LocalizedPoly& f_psi() const { return f_psi_; }
  // f_psi = P(f)/f0^3 - fp0^2/(4 f0), with P from compute_P.
  LocalizedPoly f_psi_from_P() const;

  const DiffOp& basis_eta(int i) const { return etas_.at(static_cast<std::size_t>(i)); }
  // eta^y = sum over coordinates c of f_[y,c] d/df_c.
  DiffOp eta_field(const LieElement& y) const;
  // Delta^{x_i} (primed = false) or Delta^{x'_i}: eta^x - (f_x / f0) eta^{x0}.
  DiffOp delta_field(int i, bool primed) const;
  DiffOp euler_field() const;
  const DiffOp& eta_h() const { return eta_h_; }
  const DiffOp& eta_x0() const { return eta_x0_; }

  // Chart coordinates of a point given by the values of all basis functions.
  std::vector<Rational> chart_point(const std::vector<Rational>& basis_values) const;

 private:
  AlgebraPtr spec_;
  std::vector<LocalizedPoly> functions_;
  std::vector<DiffOp> etas_;
  LocalizedPoly f_psi_;
  DiffOp eta_h_, eta_x0_;
};

// Values f_b(z) of every basis function at a random rational point z of the
// orbit with f0(z) != 0, built from the matrix / vector model directly
// (sl: z = u v^T with v.u = 0; so: z = u ^ v with u, v isotropic and
// orthogonal). Independent of the chart formulas.
std::vector<Rational> random_orbit_point(const AlgebraSpec& spec, std::mt19937_64& rng);

}  // namespace orbitweyl
