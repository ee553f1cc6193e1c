#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "orbitweyl/inner_product.hpp"

using namespace orbitweyl;
using testing_support::built;

namespace {

OrbitFunctionExpr random_monomial(int dim, int p, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, dim - 1);
  OrbitFunctionExpr::Monomial m;
  for (int i = 0; i < p; ++i) m.push_back(pick(rng));
  return OrbitFunctionExpr::monomial(m);
}

// Weyl dimension of the irreducible sl(3) module with highest weight 2*psi.
int sl3_cartan_square_dim() {
  // Highest weight (2,2): (a+1)(b+1)(a+b+2)/2.
  return 3 * 3 * 6 / 2;
}

}  // namespace

TEST_CASE("conjugation") {
  auto g = build_algebra(Family::sl, 3);
  auto fpsi = OrbitFunctionExpr::linear(g->x_psi());
  auto f0 = OrbitFunctionExpr::linear(g->x0());
  CHECK(conjugate_expr(*g, fpsi) == f0);
  CHECK(conjugate_expr(*g, f0) == fpsi);
  CHECK(conjugate_expr(*g, fpsi * fpsi) == f0 * f0);
  std::mt19937_64 rng(3);
  for (auto fam : {Family::sl, Family::so}) {
    auto spec = build_algebra(fam, fam == Family::sl ? 4 : 7);
    for (int t = 0; t < 20; ++t) {
      auto e = random_monomial(spec->dim(), 3, rng) + random_monomial(spec->dim(), 3, rng) * Rational(-2);
      CHECK(conjugate_expr(*spec, conjugate_expr(*spec, e)) == e);
    }
  }
}

TEST_CASE("lift to operators") {
  auto& b = built(Family::sl, 3);
  const ExoticFamily& fam = testing_support::family(Family::sl, 3);
  const AlgebraSpec& g = b.spec();
  auto f0 = OrbitFunctionExpr::linear(g.x0());
  CHECK(lift_to_operator(fam, f0) == b.d0);
  CHECK(lift_to_operator(fam, OrbitFunctionExpr::constant(1)) == DiffOp::identity());
  CHECK(lift_to_operator(fam, f0 * f0) == b.d0 * b.d0);
  LocalizedPoly x = b.chart->f_psi().pow(3);
  CHECK(apply_lift(fam, f0 * f0, x) == (b.d0 * b.d0).apply(x));
}

TEST_CASE("pairing examples") {
  auto& b = built(Family::sl, 3);
  const ExoticFamily& fam = testing_support::family(Family::sl, 3);
  const AlgebraSpec& g = b.spec();
  auto one = OrbitFunctionExpr::constant(1);
  auto fpsi = OrbitFunctionExpr::linear(g.x_psi());
  auto f0 = OrbitFunctionExpr::linear(g.x0());
  CHECK(pairing(*b.chart, fam, one, one) == 1);
  CHECK(pairing(*b.chart, fam, fpsi, fpsi) == make_rational(3, 2));
  CHECK(pairing(*b.chart, fam, fpsi, f0) == 0);
  CHECK(pairing(*b.chart, fam, fpsi * fpsi, fpsi) == 0);
  CHECK(pairing(*b.chart, fam, one, fpsi) == 0);
}

TEST_CASE("norms of f_psi powers") {
  for (auto [f, N] : {std::pair{Family::sl, 3}, std::pair{Family::so, 6}}) {
    auto& b = built(f, N);
    const ExoticFamily& fam = testing_support::family(f, N);
    auto fpsi = OrbitFunctionExpr::linear(b.spec().x_psi());
    OrbitFunctionExpr power = OrbitFunctionExpr::constant(1);
    Rational product(1);
    for (int p = 1; p <= 4; ++p) {
      power = power * fpsi;
      product *= expected_gamma(b.spec(), p);
      CHECK(pairing(*b.chart, fam, power, power) == product);
    }
  }
}

TEST_CASE("pairing symmetry and adjointness") {
  auto& b = built(Family::sl, 3);
  const ExoticFamily& fam = testing_support::family(Family::sl, 3);
  const AlgebraSpec& g = b.spec();
  std::mt19937_64 rng(0xC0FFEE);
  std::uniform_int_distribution<int> pick(0, g.dim() - 1), deg(1, 3);
  for (int t = 0; t < 50; ++t) {
    int p = deg(rng);
    int bi = pick(rng);
    auto h = random_monomial(g.dim(), p, rng) + random_monomial(g.dim(), p, rng) * make_rational(-1, 3);
    auto k = random_monomial(g.dim(), p - 1, rng);
    auto conj_fb = conjugate_expr(g, OrbitFunctionExpr::basis(bi));
    LocalizedPoly dh = fam.by_basis[static_cast<std::size_t>(bi)].apply(chart_expand(*b.chart, h));
    CHECK(pairing(*b.chart, fam, h, conj_fb * k) == pairing(*b.chart, fam, dh, k));
  }
  for (int t = 0; t < 10; ++t) {
    auto x = random_monomial(g.dim(), 2, rng), y = random_monomial(g.dim(), 2, rng);
    CHECK(pairing(*b.chart, fam, x, y) == pairing(*b.chart, fam, y, x));
  }
}

TEST_CASE("conjugate operators match the sigma-twisted family") {
  auto& b = built(Family::sl, 3);
  const ExoticFamily& fam = testing_support::family(Family::sl, 3);
  const AlgebraSpec& g = b.spec();
  // conj(D_x(conj f)) = -D_{sigma x}(f) on degree 1 and 2 inputs.
  for (int p = 1; p <= 2; ++p) {
    for (const auto& m : degree_monomials(g.dim(), p)) {
      if (m.front() > 2) break;
      auto f = OrbitFunctionExpr::monomial(m);
      for (int x = 0; x < g.dim(); ++x) {
        LocalizedPoly lhs = fam.by_basis[static_cast<std::size_t>(x)].apply(chart_expand(*b.chart, conjugate_expr(g, f)));
        auto lhs_expr = conjugate_expr(g, express_in_monomials(*b.chart, lhs, p - 1));
        LocalizedPoly rhs = fam.op(g.sigma(g.basis(x))).apply(chart_expand(*b.chart, f)) * Rational(-1);
        CHECK(chart_expand(*b.chart, lhs_expr) == rhs);
      }
    }
  }
}

TEST_CASE("Gram matrices of sl(3)") {
  auto& b = built(Family::sl, 3);
  const ExoticFamily& fam = testing_support::family(Family::sl, 3);
  GramResult g1 = gram_matrix(*b.chart, fam, 1, 0xC0FFEE);
  CHECK(g1.monomials.size() == 8);
  CHECK(g1.symmetric);
  CHECK(g1.ldl.psd);
  CHECK(g1.ldl.rank == 8);
  CHECK(g1.positive_on_quotient);
  GramResult g2 = gram_matrix(*b.chart, fam, 2, 0xC0FFEE);
  CHECK(g2.monomials.size() == 36);
  CHECK(g2.symmetric);
  CHECK(g2.ldl.psd);
  CHECK(g2.ldl.rank == sl3_cartan_square_dim());
  CHECK(g2.oracle_rank == sl3_cartan_square_dim());
  CHECK(g2.relations_in_kernel);
  CHECK(g2.positive_on_quotient);
  // Entries agree with the direct pairing.
  for (std::size_t i = 0; i < 36; i += 5)
    for (std::size_t j = 0; j < 36; j += 7)
      CHECK(g2.matrix[i][j] == pairing(*b.chart, fam, OrbitFunctionExpr::monomial(g2.monomials[i]),
                                       OrbitFunctionExpr::monomial(g2.monomials[j])));
}

TEST_CASE("Gram CSV export") {
  auto& b = built(Family::so, 6);
  const ExoticFamily& fam = testing_support::family(Family::so, 6);
  GramResult g1 = gram_matrix(*b.chart, fam, 1, 0xC0FFEE);
  std::string csv = g1.to_csv();
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 15);
  CHECK(std::count(csv.begin(), csv.end(), ',') == 15 * 14);
  CHECK(g1.positive_on_quotient);
}

TEST_CASE("evaluation oracle detects relations") {
  auto g = build_algebra(Family::sl, 3);
  Matrix rel;
  auto monos = degree_monomials(g->dim(), 2);
  CHECK(evaluation_rank(*g, monos, 0xC0FFEE, &rel) == 27);
  CHECK(rel.size() == 9);
  CHECK(evaluation_rank(*g, degree_monomials(g->dim(), 1), 1) == 8);
}
