#include <random>

#include "doctest.h"
#include "orbitweyl/localized_poly.hpp"

using namespace orbitweyl;

namespace {

LocalizedPoly v(int slot, int p = 1) { return LocalizedPoly::variable(slot, p); }

// sl(3) f_psi assembled by hand: (a^2 - (f0 fp0)^2) / (4 f0^3), a = f1 fp1.
LocalizedPoly sl3_f_psi() {
  LocalizedPoly a = v(2) * v(3);
  return (a * a - (v(0) * v(1)).pow(2)) * v(0, -3) * make_rational(1, 4);
}

LocalizedPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-5, 5), expo(0, 2), f0exp(-2, 2), count(0, 4);
  std::vector<LocalizedPoly::Term> terms;
  int n = count(rng);
  for (int i = 0; i < n; ++i) {
    ChartMonomial m;
    m.set(0, f0exp(rng));
    for (int s = 1; s < 6; ++s) m.set(s, expo(rng));
    terms.emplace_back(m, make_rational(coef(rng), 1 + (i % 3)));
  }
  return LocalizedPoly::from_terms(terms);
}

}  // namespace

TEST_CASE("rational canonical form") {
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(make_rational(0, 7)) == "0");
  CHECK(make_rational(0, 5).get_den() == 1);
  CHECK_THROWS(make_rational(1, 0));
  CHECK(power(make_rational(2, 3), -2) == make_rational(9, 4));
  CHECK(parse_rational("10/4") == make_rational(5, 2));
}

TEST_CASE("unit of the localization and basic arithmetic") {
  CHECK(v(0) * v(0, -1) == LocalizedPoly(1));
  LocalizedPoly t = v(2) * v(3);
  CHECK((t + t).to_string() == "2*f1*fp1");
  CHECK((t - t).is_zero());
  CHECK(LocalizedPoly().to_string() == "0");
}

TEST_CASE("serialization of the sl(3) f_psi closed form") {
  CHECK(sl3_f_psi().to_string() == "(1/4)*f0^-3*f1^2*fp1^2 - (1/4)*f0^-1*fp0^2");
}

TEST_CASE("partial derivatives") {
  CHECK(v(1, 2).partial(1) == v(1) * Rational(2));
  CHECK(v(0, -1).partial(0) == -v(0, -2));
  LocalizedPoly a = v(2) * v(3) + v(4) * v(5);
  CHECK(a.partial(2) == v(3));
  DerivMultiIndex d = DerivMultiIndex::unit(0, 2);
  CHECK(v(0, -1).partial(d) == v(0, -3) * Rational(2));
}

TEST_CASE("evaluation") {
  std::vector<Rational> pt(4);
  pt[0] = make_rational(1, 2);
  CHECK(v(0).eval(pt) == make_rational(1, 2));
  pt[0] = 2;
  CHECK(v(0, -1).eval(pt) == make_rational(1, 2));
  // f0 = 1, fp0 = 0, f1 = 2, fp1 = 1: a = 2, f_psi = a^2 / 4 = 1.
  std::vector<Rational> q{Rational(1), Rational(0), Rational(2), Rational(1)};
  CHECK(sl3_f_psi().eval(q) == 1);
  pt[0] = 0;
  CHECK_THROWS_AS(v(0, -1).eval(pt), std::domain_error);
}

TEST_CASE("grade_split") {
  auto e = (v(0) + v(2) * v(3)).grade_split(Grading::euler);
  REQUIRE(e.size() == 2);
  CHECK(e[1] == v(0));
  CHECK(e[2] == v(2) * v(3));
  auto h = v(0).grade_split(Grading::h_weight);
  REQUIRE(h.size() == 1);
  CHECK(h.begin()->first == -2);
  auto f = sl3_f_psi().grade_split(Grading::euler);
  REQUIRE(f.size() == 1);
  CHECK(f.begin()->first == 1);
  CHECK(f[1] == sl3_f_psi());
  auto fh = sl3_f_psi().grade_split(Grading::h_weight);
  REQUIRE(fh.size() == 1);
  CHECK(fh.begin()->first == 2);
}

TEST_CASE("ring axioms, Leibniz rule and graded multiplicativity on random inputs") {
  std::mt19937_64 rng(0xC0FFEE);
  for (int trial = 0; trial < 60; ++trial) {
    LocalizedPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    for (int s = 0; s < 6; ++s) CHECK((a * b).partial(s) == a.partial(s) * b + a * b.partial(s));
    auto ga = a.grade_split(Grading::euler), gb = b.grade_split(Grading::euler);
    for (const auto& [k, p] : (a * b).grade_split(Grading::euler)) {
      bool found = false;
      for (const auto& [i, pa] : ga)
        if (gb.count(k - i)) found = true;
      CHECK(found);
    }
    // Canonical form does not depend on construction order.
    std::vector<LocalizedPoly::Term> rev(a.terms().rbegin(), a.terms().rend());
    CHECK(LocalizedPoly::from_terms(rev).to_string() == a.to_string());
  }
}

TEST_CASE("only f0 may be inverted") {
  ChartMonomial m;
  m.set(2, -1);
  CHECK_THROWS(LocalizedPoly::monomial(m));
  CHECK_THROWS(ChartMonomial::unit(0, 200));
}

TEST_CASE("scalar_multiple") {
  LocalizedPoly p = v(0) + v(2) * v(3);
  CHECK(*scalar_multiple(p * Rational(7, 3), p) == make_rational(7, 3));
  CHECK_FALSE(scalar_multiple(p + v(1), p).has_value());
}
