#include <random>

#include "doctest.h"
#include "orbitweyl/chart.hpp"
#include "orbitweyl/diff_op.hpp"

using namespace orbitweyl;

namespace {

LocalizedPoly v(int slot, int p = 1) { return LocalizedPoly::variable(slot, p); }
DiffOp d(int slot) { return DiffOp::derivative(slot); }
DiffOp mul(const LocalizedPoly& p) { return DiffOp::multiplication(p); }

LocalizedPoly random_poly(std::mt19937_64& rng, int terms) {
  std::uniform_int_distribution<int> coef(-4, 4), expo(0, 2), f0exp(-2, 2);
  std::vector<LocalizedPoly::Term> t;
  for (int i = 0; i < terms; ++i) {
    ChartMonomial m;
    m.set(0, f0exp(rng));
    for (int s = 1; s < 4; ++s) m.set(s, expo(rng));
    t.emplace_back(m, Rational(coef(rng)));
  }
  return LocalizedPoly::from_terms(t);
}

DiffOp random_op(std::mt19937_64& rng, int max_order) {
  std::uniform_int_distribution<int> slot(0, 3), order(0, max_order);
  DiffOp op;
  for (int i = 0; i < 3; ++i) {
    DerivMultiIndex idx;
    int k = order(rng);
    for (int j = 0; j < k; ++j) {
      int s = slot(rng);
      idx.set(s, idx[s] + 1);
    }
    op += DiffOp::term(idx, random_poly(rng, 2));
  }
  return op;
}

}  // namespace

TEST_CASE("apply") {
  Chart chart(build_algebra(Family::sl, 3));
  CHECK(chart.eta_x0() == mul(v(0) * Rational(2)) * d(1));
  CHECK(chart.eta_x0().apply(v(1)) == v(0) * Rational(2));
  CHECK(chart.euler_field().apply(v(2) * v(3)) == v(2) * v(3) * Rational(2));
  const LocalizedPoly& fpsi = chart.f_psi();
  DiffOp eta2 = chart.eta_x0() * chart.eta_x0();
  for (int k : {2, 3}) {
    LocalizedPoly expected =
        (v(0) * fpsi * Rational(-2 * k) + v(1, 2) * Rational(k * (k - 1))) * fpsi.pow(static_cast<unsigned>(k - 2));
    CHECK(eta2.apply(fpsi.pow(static_cast<unsigned>(k))) == expected);
  }
}

TEST_CASE("compose and commutator examples") {
  CHECK(d(2) * mul(v(2)) == mul(v(2)) * d(2) + DiffOp::identity());
  Chart chart(build_algebra(Family::sl, 3));
  DiffOp e = chart.euler_field();
  CHECK(commutator(e, chart.eta_x0()).is_zero());
  CHECK(commutator(e, mul(v(0))) == mul(v(0)));
  CHECK(commutator(chart.delta_field(1, false), chart.delta_field(1, true)) == chart.eta_x0());
  CHECK(commutator(chart.eta_h(), chart.delta_field(1, false)) == -chart.delta_field(1, false));
  Chart c4(build_algebra(Family::sl, 4));
  CHECK(commutator(c4.delta_field(1, false), c4.delta_field(2, false)).is_zero());
}

TEST_CASE("text format") {
  Chart chart(build_algebra(Family::sl, 3));
  CHECK(chart.eta_x0().to_string() == "2*f0*D_fp0");
  CHECK(DiffOp().to_string() == "0");
  CHECK((d(1) * d(1)).to_string() == "D_fp0^2");
}

TEST_CASE("principal symbols") {
  Chart chart(build_algebra(Family::sl, 3));
  SymbolPoly xi0 = SymbolPoly::fiber(0), xip0 = SymbolPoly::fiber(1);
  CHECK(principal_symbol(chart.eta_x0()) == SymbolPoly(v(0) * Rational(2)) * xip0);
  SymbolPoly lambda;
  for (int s = 0; s < 4; ++s) lambda += SymbolPoly(v(s)) * SymbolPoly::fiber(s);
  CHECK(principal_symbol(chart.euler_field()) == lambda);
  SymbolPoly phi_xp1 = principal_symbol(chart.eta_field(chart.spec().coordinate(slot_fp(1))));
  SymbolPoly phi_x0 = principal_symbol(chart.eta_x0());
  CHECK(principal_symbol(chart.delta_field(1, true)) == phi_xp1 - SymbolPoly(v(3) * v(0, -1)) * phi_x0);
  CHECK_THROWS(principal_symbol(DiffOp()));
  CHECK(principal_symbol(chart.eta_x0()).to_string() == "2*f0*xip0");
}

TEST_CASE("grading checks") {
  Chart chart(build_algebra(Family::sl, 3));
  DiffOp e = chart.euler_field();
  CHECK(grading_check(chart.eta_x0(), e, chart.eta_h(), 0, -2));
  CHECK(grading_check(mul(v(0)), e, chart.eta_h(), 1, -2));
  CHECK(grading_check(e, e, chart.eta_h(), 0, 0));
  CHECK_FALSE(grading_check(e, e, chart.eta_h(), 1, 0));
  CHECK(chart.eta_x0().euler_degree() == 0);
  CHECK(chart.eta_x0().h_weight() == -2);
}

TEST_CASE("randomized operator algebra") {
  std::mt19937_64 rng(0xC0FFEE);
  for (int trial = 0; trial < 25; ++trial) {
    DiffOp a = random_op(rng, 2), b = random_op(rng, 2), c = random_op(rng, 2);
    LocalizedPoly g = random_poly(rng, 3);
    CHECK((a * b).apply(g) == a.apply(b.apply(g)));
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * (b + c)) == a * b + a * c);
    DiffOp jac = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b));
    CHECK(jac.is_zero());
    CHECK(commutator(a, b) == -commutator(b, a));
    if (!a.is_zero() && !b.is_zero()) {
      // Orders add unless the top symbols multiply to zero, which cannot
      // happen in a domain.
      CHECK((a * b).order() == a.order() + b.order());
      CHECK(principal_symbol(a * b) == principal_symbol(a) * principal_symbol(b));
    }
  }
}
