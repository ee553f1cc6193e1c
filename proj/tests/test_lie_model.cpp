#include "doctest.h"
#include "orbitweyl/lie_model.hpp"

using namespace orbitweyl;

namespace {

LocalizedPoly w(int slot) { return LocalizedPoly::variable(slot); }

void check_invariants(const AlgebraSpec& g) {
  const int d = g.dim();
  bool jacobi = true, invariance = true, antisym = true, sym = true, sigma_hom = true, graded = true;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      LieElement x = g.basis(i), y = g.basis(j);
      LieElement xy = g.bracket(x, y);
      if (xy != -g.bracket(y, x)) antisym = false;
      if (g.killing_basis(i, j) != g.killing_basis(j, i)) sym = false;
      if (g.sigma(xy) != g.bracket(g.sigma(x), g.sigma(y))) sigma_hom = false;
      for (const auto& t : g.bracket_basis(i, j))
        if (g.grade(t.index) != g.grade(i) + g.grade(j)) graded = false;
      for (int k = 0; k < d; ++k) {
        LieElement z = g.basis(k);
        LieElement jac = g.bracket(x, g.bracket(y, z)) + g.bracket(y, g.bracket(z, x)) + g.bracket(z, xy);
        if (!jac.is_zero()) jacobi = false;
        if (g.killing(x, g.bracket(y, z)) != g.killing(xy, z)) invariance = false;
      }
    }
    if (g.sigma(g.sigma(g.basis(i))) != g.basis(i)) sigma_hom = false;
  }
  CHECK(antisym);
  CHECK(jacobi);
  CHECK(sym);
  CHECK(invariance);
  CHECK(sigma_hom);
  CHECK(graded);
}

void check_triple(const AlgebraSpec& g) {
  const LieElement &xpsi = g.x_psi(), &h = g.h(), &x0 = g.x0();
  CHECK(g.bracket(h, xpsi) == xpsi * Rational(2));
  CHECK(g.bracket(h, x0) == x0 * Rational(-2));
  CHECK(g.bracket(xpsi, x0) == h);
  CHECK(g.killing(x0, xpsi) == make_rational(1, 2));
  CHECK(g.sigma(xpsi) == -x0);
  // Canonical g_{-1} basis: (x|y) = -(x, sigma y).
  for (int i = 1; i <= g.m(); ++i) {
    const LieElement &xi = g.coordinate(slot_f(i)), &xpi = g.coordinate(slot_fp(i));
    CHECK(-g.killing(xi, g.sigma(xi)) == make_rational(1, 2));
    CHECK(-g.killing(xpi, g.sigma(xpi)) == make_rational(1, 2));
    for (int j = 1; j <= g.m(); ++j) {
      const LieElement &xj = g.coordinate(slot_f(j)), &xpj = g.coordinate(slot_fp(j));
      CHECK(g.bracket(xpi, xj) == (i == j ? x0 : LieElement::zero(g.dim())));
      CHECK(g.bracket(xi, xj).is_zero());
      CHECK(g.bracket(xpi, xpj).is_zero());
    }
  }
  CHECK(static_cast<int>(g.basis_of_grade(-1).size()) == 2 * g.m());
  CHECK(g.basis_of_grade(-2).size() == 1);
}

}  // namespace

TEST_CASE("dimensions") {
  auto sl3 = build_algebra(Family::sl, 3);
  CHECK(sl3->dim() == 8);
  CHECK(sl3->m() == 1);
  CHECK(sl3->orbit_dim() == 4);
  auto so6 = build_algebra(Family::so, 6);
  CHECK(so6->dim() == 15);
  CHECK(so6->m() == 2);
  CHECK(so6->orbit_dim() == 6);
  CHECK(build_algebra(Family::so, 7)->m() == 3);
}

TEST_CASE("unsupported algebras are rejected") {
  CHECK_THROWS_AS(parse_family("sp"), UnsupportedAlgebra);
  CHECK_THROWS_AS(build_algebra(Family::sl, 2), UnsupportedAlgebra);
  CHECK_THROWS_AS(build_algebra(Family::so, 5), UnsupportedAlgebra);
  auto a = build_algebra(Family::sl, 3);
  auto b = build_algebra(Family::so, 6);
  CHECK_THROWS(a->bracket(a->x0(), b->x0()));
}

TEST_CASE("structure sweeps") {
  for (int N : {3, 4, 5}) {
    CAPTURE(N);
    auto g = build_algebra(Family::sl, N);
    check_invariants(*g);
    check_triple(*g);
  }
  for (int N : {6, 7, 8}) {
    CAPTURE(N);
    auto g = build_algebra(Family::so, N);
    check_invariants(*g);
    check_triple(*g);
  }
}

TEST_CASE("bracket examples") {
  auto g = build_algebra(Family::sl, 3);
  CHECK(g->bracket(g->coordinate(slot_fp(1)), g->coordinate(slot_f(1))) == g->x0());
  auto s = build_algebra(Family::so, 7);
  const ChartLabels& L = s->chart_labels();
  CHECK(s->bracket(s->coordinate(slot_fp(L.xtp0)), s->coordinate(slot_f(L.xt0))) == s->x0());
}

TEST_CASE("tangent dimension") {
  CHECK(tangent_dim(*build_algebra(Family::sl, 3)) == 4);
  CHECK(tangent_dim(*build_algebra(Family::so, 6)) == 6);
  CHECK(tangent_dim(*build_algebra(Family::so, 8)) == 10);
  CHECK(tangent_dim(*build_algebra(Family::sl, 6)) == 10);
}

TEST_CASE("quartic P: sl") {
  for (int N = 3; N <= 6; ++N) {
    auto g = build_algebra(Family::sl, N);
    LocalizedPoly s;
    for (int p = 1; p <= g->m(); ++p) s += w(slot_f(p)) * w(slot_fp(p));
    CHECK(compute_P(*g) == s * s * make_rational(1, 4));
    CHECK(compute_P(*g).eval(std::vector<Rational>(static_cast<std::size_t>(g->chart_slots()), Rational(1))) ==
          make_rational(g->m() * g->m(), 4));
  }
}

TEST_CASE("quartic P: so, against the printed closed form") {
  for (int N = 6; N <= 9; ++N) {
    CAPTURE(N);
    auto g = build_algebra(Family::so, N);
    const ChartLabels& L = g->chart_labels();
    // 1/4 ((sum w_i w'_i - w~_i w~'_i) - w~0 w~'0)^2
    //   + ((sum w'_i w~_i) + 1/2 w~0^2)((sum w_i w~'_i) - 1/2 w~'0^2)
    LocalizedPoly a, c, b;
    for (std::size_t i = 0; i < L.x.size(); ++i) {
      a += w(slot_f(L.x[i])) * w(slot_fp(L.xp[i])) - w(slot_f(L.xt[i])) * w(slot_fp(L.xtp[i]));
      c += w(slot_fp(L.xp[i])) * w(slot_f(L.xt[i]));
      b += w(slot_f(L.x[i])) * w(slot_fp(L.xtp[i]));
    }
    if (g->odd()) {
      a -= w(slot_f(L.xt0)) * w(slot_fp(L.xtp0));
      c += w(slot_f(L.xt0)) * w(slot_f(L.xt0)) * make_rational(1, 2);
      b -= w(slot_fp(L.xtp0)) * w(slot_fp(L.xtp0)) * make_rational(1, 2);
    }
    LocalizedPoly printed = a * a * make_rational(1, 4) + c * b;
    CHECK(compute_P(*g) == printed);
    CHECK(closed_form_P(*g) == printed);
  }
}
