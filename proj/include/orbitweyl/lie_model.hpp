#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "orbitweyl/localized_poly.hpp"
#include "orbitweyl/rational.hpp"

namespace orbitweyl {

enum class Family { sl, so };

std::string family_name(Family f);

// Raised for families or ranks outside the supported models.
class UnsupportedAlgebra : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parses "sl" / "so"; "sp" and anything else raise UnsupportedAlgebra.
Family parse_family(const std::string& name);

class AlgebraSpec;

// Coefficient vector over the fixed basis of one algebra.
class LieElement {
 public:
  LieElement() = default;
  explicit LieElement(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}
  static LieElement zero(int dim) { return LieElement(std::vector<Rational>(static_cast<std::size_t>(dim))); }
  static LieElement unit(int dim, int i, const Rational& c = 1);

  int dim() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  bool is_zero() const;

  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  LieElement& operator*=(const Rational& c);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(LieElement a, const Rational& c) { return a *= c; }
  friend LieElement operator*(const Rational& c, LieElement a) { return a *= c; }
  LieElement operator-() const { return *this * Rational(-1); }

  friend bool operator==(const LieElement&, const LieElement&) = default;

 private:
  std::vector<Rational> coeffs_;
};

struct StructureTerm {
  int index;
  Rational coef;
};

// Chart index (1..m) of every g_{-1} label of the so model; -1 where absent.
// sl uses only x and xp.
struct ChartLabels {
  std::vector<int> x, xp;    // x_i, x'_i   (so: i = 1..n-2)
  std::vector<int> xt, xtp;  // so only: x~_i, x~'_i
  int xt0 = -1, xtp0 = -1;   // so, odd N only: x~_0, x~'_0
};

class AlgebraSpec {
 public:
  Family family() const { return family_; }
  int N() const { return N_; }
  int m() const { return m_; }
  int dim() const { return static_cast<int>(names_.size()); }
  int orbit_dim() const { return 2 * m_ + 2; }
  int chart_slots() const { return 2 * m_ + 2; }

  const std::string& basis_name(int i) const { return names_.at(static_cast<std::size_t>(i)); }
  LieElement basis(int i) const { return LieElement::unit(dim(), i); }

  const std::vector<StructureTerm>& bracket_basis(int i, int j) const {
    return table_[static_cast<std::size_t>(i * dim() + j)];
  }
  LieElement bracket(const LieElement& x, const LieElement& y) const;
  // Bracket with polynomial coefficients (used for the quartic P).
  std::vector<LocalizedPoly> bracket(const std::vector<LocalizedPoly>& x,
                                     const std::vector<LocalizedPoly>& y) const;

  const Rational& killing_basis(int i, int j) const {
    return killing_[static_cast<std::size_t>(i * dim() + j)];
  }
  Rational killing(const LieElement& x, const LieElement& y) const;

  // sigma maps basis element i to sign * basis element index.
  std::pair<int, int> sigma_basis(int i) const { return sigma_[static_cast<std::size_t>(i)]; }
  LieElement sigma(const LieElement& x) const;

  // ad(h) eigenvalue of basis element i.
  int grade(int i) const { return grade_[static_cast<std::size_t>(i)]; }
  std::vector<int> basis_of_grade(int k) const;
  // Basis of g_neg = g_{-1} + g_{-2}.
  std::vector<int> negative_basis() const;

  const LieElement& x_psi() const { return x_psi_; }
  const LieElement& h() const { return coordinates_[1]; }
  const LieElement& x0() const { return coordinates_[0]; }
  // Element whose orbit function is chart variable `slot`:
  // 0 -> x0, 1 -> x'0 = h, 2i -> x_i, 2i+1 -> x'_i.
  const LieElement& coordinate(int slot) const { return coordinates_.at(static_cast<std::size_t>(slot)); }
  const std::string& coordinate_label(int slot) const { return labels_.at(static_cast<std::size_t>(slot)); }
  const ChartLabels& chart_labels() const { return chart_labels_; }

  // sl model: basis element i as a list of (row, col, coefficient) matrix entries.
  const std::vector<std::tuple<int, int, Rational>>& matrix_entries(int i) const {
    return matrix_entries_.at(static_cast<std::size_t>(i));
  }
  // so model: basis element i is wedge(i).first ^ wedge(i).second.
  std::pair<int, int> wedge(int i) const { return wedges_.at(static_cast<std::size_t>(i)); }
  // so vector basis indices: v_i -> 2(i-1), v'_i -> 2(i-1)+1, v_0 -> 2n.
  int vec_v(int i) const { return 2 * (i - 1); }
  int vec_vp(int i) const { return 2 * (i - 1) + 1; }
  int vec_v0() const { return 2 * (N_ / 2); }
  int half_rank() const { return N_ / 2; }  // n for so(2n) / so(2n+1)
  bool odd() const { return N_ % 2 == 1; }
  // Symmetric bilinear form on the so vector basis.
  int dot(int a, int b) const;
  std::string vector_name(int a) const;

  friend std::shared_ptr<const AlgebraSpec> build_algebra(Family family, int N);

 private:
  AlgebraSpec() = default;
  void build_sl();
  void build_so();
  void finish();
  int find_wedge(int a, int b) const;

  Family family_ = Family::sl;
  int N_ = 0;
  int m_ = 0;
  std::vector<std::string> names_;
  std::vector<std::vector<StructureTerm>> table_;
  std::vector<Rational> killing_;
  std::vector<std::pair<int, int>> sigma_;
  std::vector<int> grade_;
  LieElement x_psi_;
  std::vector<LieElement> coordinates_;
  std::vector<std::string> labels_;
  ChartLabels chart_labels_;
  std::vector<std::vector<std::tuple<int, int, Rational>>> matrix_entries_;
  std::vector<std::pair<int, int>> wedges_;
};

using AlgebraPtr = std::shared_ptr<const AlgebraSpec>;

// sl: N >= 3 (N <= 9); so: N >= 6 (N <= 11). Throws UnsupportedAlgebra.
AlgebraPtr build_algebra(Family family, int N);

// Rank of y -> [y, x_psi] over the basis.
int tangent_dim(const AlgebraSpec& spec);

// P(w) from (1/24)(ad w)^4 x_psi = P(w) x0 with w = sum w_i x_i + w'_i x'_i.
// The w variables live in chart slots 2i (w_i) and 2i+1 (w'_i). Throws
// std::logic_error if (ad w)^4 x_psi has components off the x0 line.
LocalizedPoly compute_P(const AlgebraSpec& spec);

// Closed form of P in the same variables: sl 1/4 (sum w_p w'_p)^2, so
// 1/4 a^2 + b c with a, b, c as in the chart module.
LocalizedPoly closed_form_P(const AlgebraSpec& spec);

// The quadratic a and, for so, b and c of the closed forms, in chart slots.
LocalizedPoly quadratic_a(const AlgebraSpec& spec);
LocalizedPoly quadratic_b(const AlgebraSpec& spec);
LocalizedPoly quadratic_c(const AlgebraSpec& spec);

}  // namespace orbitweyl
