#include "orbitweyl/report.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "orbitweyl/parallel.hpp"

namespace orbitweyl {

namespace {

constexpr std::size_t kWitnessLimit = 4000;

std::string clip(std::string s) {
  if (s.size() > kWitnessLimit) s = s.substr(0, kWitnessLimit) + " ...";
  return s;
}

const std::map<std::string, std::string>& prerequisite() {
  static const std::map<std::string, std::string> p{
      {"model", ""},          {"chart", "model"},     {"heisenberg", "chart"},     {"build", "chart"},
      {"q-solve", "build"},   {"eigenvalues", "build"}, {"lowest-weight", "build"}, {"symbol", "build"},
      {"family", "build"},    {"commutativity", "family"}, {"gram", "family"}};
  return p;
}

// Shared state of one run; objects are built on first use.
class Engine {
 public:
  explicit Engine(const SuiteConfig& cfg) : cfg_(cfg), spec_(build_algebra(cfg.family, cfg.N)) {}

  const SuiteConfig& cfg() const { return cfg_; }
  const AlgebraSpec& spec() const { return *spec_; }
  const Chart& chart() {
    if (!chart_) chart_ = std::make_unique<Chart>(spec_);
    return *chart_;
  }
  const ExoticBuilder& builder() {
    if (!builder_) builder_ = std::make_unique<ExoticBuilder>(chart());
    return *builder_;
  }
  // q re-derived from divisibility, never the closed form.
  const CorrectionPoly& q() {
    if (!q_) {
      QSolveResult r = builder().solve_q(4);
      if (!r.ok) throw std::runtime_error("solve_q failed at k = " + std::to_string(r.failing_k) + ": " + r.error);
      q_ = r.q;
    }
    return *q_;
  }
  const DiffOp& S() {
    if (!S_) S_ = builder().build_S(q());
    return *S_;
  }
  const DiffOp& d0() {
    if (!d0_) d0_ = builder().build_D0(q());
    return *d0_;
  }
  const ExoticFamily& family() {
    if (!family_) {
      family_ = std::make_unique<ExoticFamily>(generate_family(chart(), d0()));
      if (!family_->ok) throw std::runtime_error("family generation failed: " + family_->error);
    }
    return *family_;
  }

 private:
  SuiteConfig cfg_;
  AlgebraPtr spec_;
  std::unique_ptr<Chart> chart_;
  std::unique_ptr<ExoticBuilder> builder_;
  std::optional<CorrectionPoly> q_;
  std::optional<DiffOp> S_, d0_;
  std::unique_ptr<ExoticFamily> family_;
};

class SuiteWriter {
 public:
  explicit SuiteWriter(SuiteReport& r) : r_(r) {}
  void add(const std::string& id, const std::string& description, bool ok, const std::string& witness = {}) {
    r_.checks.push_back({r_.name + "." + id, description, ok ? Status::pass : Status::fail, ok ? "" : clip(witness)});
  }
  // Runs a sweep over n cases; each case returns an empty string or a witness.
  void sweep(const std::string& id, const std::string& description, std::size_t n,
             const std::function<std::string(std::size_t)>& fn) {
    auto out = parallel_map(n, fn);
    auto bad = std::find_if(out.begin(), out.end(), [](const std::string& s) { return !s.empty(); });
    add(id, description + " (" + std::to_string(n) + " cases)", bad == out.end(), bad == out.end() ? "" : *bad);
  }

 private:
  SuiteReport& r_;
};

std::string op_witness(const std::string& what, const DiffOp& d) { return what + " = " + d.to_string(); }

void suite_model(Engine& e, SuiteWriter& w) {
  const AlgebraSpec& g = e.spec();
  const int d = g.dim();
  w.sweep("jacobi", "Jacobi identity on all basis triples", static_cast<std::size_t>(d), [&](std::size_t i) {
    LieElement x = g.basis(static_cast<int>(i));
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        LieElement y = g.basis(j), z = g.basis(k);
        LieElement jac = g.bracket(x, g.bracket(y, z)) + g.bracket(y, g.bracket(z, x)) + g.bracket(z, g.bracket(x, y));
        if (!jac.is_zero()) return "Jacobi fails on " + g.basis_name(static_cast<int>(i)) + ", " + g.basis_name(j) + ", " + g.basis_name(k);
      }
    return std::string();
  });
  w.sweep("killing-invariance", "(x,[y,z]) = ([x,y],z) on all basis triples", static_cast<std::size_t>(d),
          [&](std::size_t i) {
            LieElement x = g.basis(static_cast<int>(i));
            for (int j = 0; j < d; ++j) {
              LieElement xy = g.bracket(x, g.basis(j));
              for (int k = 0; k < d; ++k)
                if (g.killing(x, g.bracket(g.basis(j), g.basis(k))) != g.killing(xy, g.basis(k)))
                  return "invariance fails on " + g.basis_name(static_cast<int>(i)) + ", " + g.basis_name(j) + ", " + g.basis_name(k);
            }
            return std::string();
          });
  bool triple = g.bracket(g.h(), g.x_psi()) == g.x_psi() * Rational(2) &&
                g.bracket(g.h(), g.x0()) == g.x0() * Rational(-2) && g.bracket(g.x_psi(), g.x0()) == g.h();
  w.add("sl2-triple", "[h,x_psi] = 2x_psi, [h,x0] = -2x0, [x_psi,x0] = h", triple);
  // Heisenberg algebra g_{-1} + g_{-2}: [x_i, x'_j] = delta_ij x0 and the rest vanish.
  const int m = g.m();
  std::string heis;
  for (int i = 1; i <= m && heis.empty(); ++i)
    for (int j = 1; j <= m && heis.empty(); ++j) {
      const LieElement &xi = g.coordinate(2 * i), &xpi = g.coordinate(2 * i + 1);
      const LieElement &xj = g.coordinate(2 * j), &xpj = g.coordinate(2 * j + 1);
      if (g.bracket(xpi, xj) != (i == j ? g.x0() : LieElement::zero(g.dim())))
        heis = "[" + g.coordinate_label(2 * i + 1) + ", " + g.coordinate_label(2 * j) + "]";
      if (!g.bracket(xi, xj).is_zero() || !g.bracket(xpi, xpj).is_zero() || !g.bracket(xi, g.x0()).is_zero())
        heis = "commuting pair at " + std::to_string(i) + ", " + std::to_string(j);
    }
  w.add("heisenberg", "g_neg is a Heisenberg algebra with center x0", heis.empty(), heis);
  LocalizedPoly P = compute_P(g), closed = closed_form_P(g);
  w.add("P-closed-form", "P from (ad w)^4 x_psi matches the closed form", P == closed,
        "compute_P = " + P.to_string() + "; closed form = " + closed.to_string());
  w.add("tangent-dim", "dim T_{x_psi} O = 2m + 2", tangent_dim(g) == 2 * m + 2,
        std::to_string(tangent_dim(g)));
}

void suite_chart(Engine& e, SuiteWriter& w) {
  const Chart& chart = e.chart();
  const AlgebraSpec& g = e.spec();
  const int d = g.dim();
  w.sweep("homomorphism", "[eta^x, eta^y] = eta^[x,y] on all basis pairs", static_cast<std::size_t>(d),
          [&](std::size_t i) {
            for (int j = 0; j < d; ++j) {
              DiffOp lhs = commutator(chart.basis_eta(static_cast<int>(i)), chart.basis_eta(j));
              DiffOp rhs = chart.eta_field(g.bracket(g.basis(static_cast<int>(i)), g.basis(j)));
              if (lhs != rhs) return op_witness("[eta^" + g.basis_name(static_cast<int>(i)) + ", eta^" + g.basis_name(j) + "] - eta^[x,y]", lhs - rhs);
            }
            return std::string();
          });
  w.sweep("equivariance", "eta^x(f_y) = f_[x,y] on all basis pairs", static_cast<std::size_t>(d), [&](std::size_t i) {
    for (int j = 0; j < d; ++j) {
      LocalizedPoly lhs = chart.basis_eta(static_cast<int>(i)).apply(chart.basis_function(j));
      LocalizedPoly rhs = chart.orbit_function(g.bracket(g.basis(static_cast<int>(i)), g.basis(j)));
      if (lhs != rhs) return "eta^" + g.basis_name(static_cast<int>(i)) + "(f_" + g.basis_name(j) + ") - f_[x,y] = " + (lhs - rhs).to_string();
    }
    return std::string();
  });
  w.add("f-psi-closed-form", "f_psi equals P/f0^3 - f'0^2/(4 f0)", chart.f_psi() == chart.f_psi_from_P(),
        "f_psi = " + chart.f_psi().to_string());
  auto neg = g.negative_basis();
  w.sweep("delta-invariance", "Delta fields commute with eta^z for z in g_neg", static_cast<std::size_t>(2 * g.m()),
          [&](std::size_t k) {
            DiffOp delta = chart.delta_field(static_cast<int>(k / 2) + 1, k % 2 == 1);
            for (int z : neg) {
              DiffOp c = commutator(chart.basis_eta(z), delta);
              if (!c.is_zero()) return op_witness("[eta^" + g.basis_name(z) + ", Delta]", c);
            }
            return std::string();
          });
}

void suite_heisenberg(Engine& e, SuiteWriter& w) {
  const Chart& chart = e.chart();
  const int m = e.spec().m();
  std::vector<DiffOp> delta, delta_p;
  for (int i = 1; i <= m; ++i) {
    delta.push_back(chart.delta_field(i, false));
    delta_p.push_back(chart.delta_field(i, true));
  }
  DiffOp euler = chart.euler_field();
  w.sweep("canonical", "[Delta^{x_i}, Delta^{x'_j}] = delta_ij eta^{x0}", static_cast<std::size_t>(m * m),
          [&](std::size_t k) {
            std::size_t i = k / static_cast<std::size_t>(m), j = k % static_cast<std::size_t>(m);
            DiffOp c = commutator(delta[i], delta_p[j]);
            DiffOp expected = i == j ? chart.eta_x0() : DiffOp();
            return c == expected ? std::string() : op_witness("[Delta_" + std::to_string(i + 1) + ", Delta'_" + std::to_string(j + 1) + "] - expected", c - expected);
          });
  w.sweep("abelian", "[Delta^{x_i}, Delta^{x_j}] = [Delta^{x'_i}, Delta^{x'_j}] = 0", static_cast<std::size_t>(m * m),
          [&](std::size_t k) {
            std::size_t i = k / static_cast<std::size_t>(m), j = k % static_cast<std::size_t>(m);
            DiffOp a = commutator(delta[i], delta[j]), b = commutator(delta_p[i], delta_p[j]);
            if (!a.is_zero()) return op_witness("[Delta_i, Delta_j]", a);
            if (!b.is_zero()) return op_witness("[Delta'_i, Delta'_j]", b);
            return std::string();
          });
  w.sweep("euler-degree-zero", "[E, Delta] = 0", static_cast<std::size_t>(2 * m), [&](std::size_t k) {
    const DiffOp& dk = k % 2 ? delta_p[k / 2] : delta[k / 2];
    DiffOp c = commutator(euler, dk);
    return c.is_zero() ? std::string() : op_witness("[E, Delta]", c);
  });
}

void suite_build(Engine& e, SuiteWriter& w) {
  const Chart& chart = e.chart();
  const ExoticBuilder& b = e.builder();
  const AlgebraSpec& g = e.spec();
  std::vector<std::pair<std::string, const DiffOp*>> blocks{{"A", &b.A()}};
  if (g.family() == Family::so) {
    blocks.emplace_back("B", &b.B());
    blocks.emplace_back("C", &b.C());
  }
  for (auto& [name, op] : blocks) {
    w.add(name + ".order", name + " has order 2", op->order() == 2, std::to_string(op->order()));
    auto hw = op->h_weight();
    w.add(name + ".grading", name + " has Euler degree 0 and h-weight -2",
          hw == -2 && grading_check(*op, chart.euler_field(), chart.eta_h(), 0, -2),
          hw ? "h-weight " + std::to_string(*hw) : "not h-homogeneous");
    std::string bad;
    for (int z : g.negative_basis())
      if (!commutator(chart.basis_eta(z), *op).is_zero()) bad = g.basis_name(z);
    w.add(name + ".g-neg", name + " commutes with eta^z for z in g_neg", bad.empty(), "fails for z = " + bad);
  }
  const CorrectionPoly& q = e.q();
  w.add("q", "correction polynomial solved from divisibility: " + q.to_string(), q.degree() <= 2);
  const DiffOp& S = e.S();
  w.add("S.order", "S has order 4", S.order() == 4);
  DiffOp hs = commutator(chart.eta_h(), S) - S * Rational(-4);
  w.add("S.h-weight", "[eta^h, S] = -4S", hs.is_zero(), op_witness("[eta^h,S] + 4S", hs));
  const DiffOp& d0 = e.d0();
  w.add("D0.order", "D0 has order 4", d0.order() == 4);
  w.add("D0.euler", "D0 has Euler degree -1", d0.euler_degree() == -1);
  w.add("D0.definition", "D0 = f0^{-1} S", d0 == S.left_multiply(LocalizedPoly::variable(0, -1)));
}

void suite_q(Engine& e, SuiteWriter& w) {
  const ExoticBuilder& b = e.builder();
  const int kmax = std::max(4, e.cfg().k_max);
  QSolveResult r = b.solve_q(kmax);
  w.add("solve", "unique admissible q(k) for k = 2.." + std::to_string(kmax) + ", interpolated with degree <= 2", r.ok,
        r.ok ? "" : "k = " + std::to_string(r.failing_k) + ": " + r.error + "; residual " + r.residual.to_string());
  if (!r.ok) return;
  CorrectionPoly expected = expected_q(e.spec());
  w.add("closed-form", "q = " + expected.to_string(), r.q == expected, "solved q = " + r.q.to_string());
  LocalizedPoly defect = b.divisibility_defect(r.q, 2, 1);
  w.add("uniqueness", "q + 1 leaves a nonzero divisibility defect at k = 2", !defect.is_zero());
}

void suite_eigen(Engine& e, SuiteWriter& w) {
  const AlgebraSpec& g = e.spec();
  EigenResult r = eigenvalue_sequence(e.chart(), e.d0(), e.cfg().k_max);
  w.add("divisible", "D0(f_psi^k) is a multiple of f_psi^(k-1) for k = 0.." + std::to_string(e.cfg().k_max),
        r.failing_k < 0, "k = " + std::to_string(r.failing_k));
  if (r.failing_k >= 0) return;
  std::string bad;
  std::string seq;
  for (std::size_t k = 0; k < r.values.size(); ++k) {
    seq += (k ? ", " : "") + to_string(r.values[k]);
    if (r.values[k] != expected_gamma(g, static_cast<int>(k)))
      bad = "k = " + std::to_string(k) + ": got " + to_string(r.values[k]) + ", expected " + to_string(expected_gamma(g, static_cast<int>(k)));
  }
  w.add("law", std::string(g.family() == Family::sl ? "gamma(k) = k^2 (k+(m-1)/2)(k+m/2)" : "gamma(k) = k(k+1)(k+m/2-1)(k+m/2-1/2)") +
                  ": " + seq,
        bad.empty(), bad);
  if (r.values.size() >= 5) {
    auto c = interpolate(r.values, 4);
    bool nonneg = std::all_of(c.begin(), c.end(), [](const Rational& x) { return sgn(x) >= 0; });
    w.add("leading-term", "interpolant is monic of degree 4 with nonnegative coefficients", c[4] == 1 && nonneg);
  }
}

void suite_lowest(Engine& e, SuiteWriter& w) {
  const Chart& chart = e.chart();
  const AlgebraSpec& g = e.spec();
  const DiffOp& d0 = e.d0();
  auto neg = g.negative_basis();
  w.add("g-neg-size", "g_neg has 2m+1 basis elements", neg.size() == static_cast<std::size_t>(2 * g.m() + 1));
  w.sweep("g-neg", "[eta^z, D0] = 0 for every basis z of g_neg", neg.size(), [&](std::size_t i) {
    DiffOp c = commutator(chart.basis_eta(neg[i]), d0);
    return c.is_zero() ? std::string() : op_witness("[eta^" + g.basis_name(neg[i]) + ", D0]", c);
  });
  DiffOp h = commutator(chart.eta_h(), d0) + d0 * Rational(2);
  w.add("h-weight", "[eta^h, D0] = -2 D0", h.is_zero(), op_witness("[eta^h,D0] + 2D0", h));
  DiffOp eu = commutator(chart.euler_field(), d0) + d0;
  w.add("euler", "[E, D0] = -D0", eu.is_zero(), op_witness("[E,D0] + D0", eu));
  DiffOp hs = commutator(chart.eta_h(), e.S()) + e.S() * Rational(4);
  w.add("S.h-weight", "[eta^h, S] = -4S", hs.is_zero(), op_witness("[eta^h,S] + 4S", hs));
  // Spot check on g'_0, the part of g_0 orthogonal to h.
  auto zero = g.basis_of_grade(0);
  const Rational hh = g.killing(g.h(), g.h());
  std::size_t count = std::min<std::size_t>(zero.size(), 4);
  w.sweep("g0-prime", "[eta^x, D0] = 0 for x in g'_0 (spot check)", count, [&](std::size_t i) {
    LieElement x = g.basis(zero[i]);
    x -= g.h() * (g.killing(x, g.h()) / hh);
    DiffOp c = commutator(chart.eta_field(x), d0);
    return c.is_zero() ? std::string() : op_witness("[eta^x, D0]", c);
  });
}

void suite_symbol(Engine& e, SuiteWriter& w) {
  SymbolPoly lhs = principal_symbol(e.d0());
  SymbolPoly r0 = e.builder().r0();
  w.add("identity", "principal symbol of D0 = f0^{-1}(P(Theta) - 1/4 lambda^2 (Phi^{x0})^2)", lhs == r0,
        "difference = " + (lhs - r0).to_string());
  w.add("degree", "symbol is homogeneous of degree 4", r0.degree() == 4 && r0.is_homogeneous());
}

void suite_family(Engine& e, SuiteWriter& w) {
  const ExoticFamily& fam = e.family();
  const AlgebraSpec& g = e.spec();
  const Chart& chart = e.chart();
  const int d = g.dim();
  w.add("span", "closure spans dim g = " + std::to_string(d) + " operators", fam.span_dim == d,
        "span " + std::to_string(fam.span_dim));
  w.add("path-independence", "different bracket paths give identical operators", fam.path_independent, fam.error);
  w.add("base", "D_{x0} = D0", fam.op(g.x0()) == e.d0());
  w.sweep("intertwining", "[eta^y, D_x] = D_[y,x] on all basis pairs", static_cast<std::size_t>(d), [&](std::size_t y) {
    for (int x = 0; x < d; ++x) {
      DiffOp c = commutator(chart.basis_eta(static_cast<int>(y)), fam.by_basis[static_cast<std::size_t>(x)]) -
                 fam.op(g.bracket(g.basis(static_cast<int>(y)), g.basis(x)));
      if (!c.is_zero()) return op_witness("[eta^y, D_x] - D_[y,x] for y = " + g.basis_name(static_cast<int>(y)) + ", x = " + g.basis_name(x), c);
    }
    return std::string();
  });
  std::string bad;
  for (int x = 0; x < d; ++x) {
    const DiffOp& op = fam.by_basis[static_cast<std::size_t>(x)];
    if (op.order() != 4 || op.euler_degree() != -1) bad = g.basis_name(x);
  }
  w.add("graded", "every D_x has order 4 and Euler degree -1", bad.empty(), "fails for " + bad);
  // Linearity on random elements.
  std::mt19937_64 rng(e.cfg().seed);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  auto rnd = [&] {
    std::vector<Rational> c;
    for (int i = 0; i < d; ++i) c.push_back(make_rational(num(rng), den(rng)));
    return LieElement(c);
  };
  std::vector<std::pair<LieElement, LieElement>> samples;
  for (int t = 0; t < 3; ++t) {
    LieElement y = rnd();
    samples.emplace_back(y, rnd());
  }
  w.sweep("linearity", "[eta^y, D_x] = D_[y,x] for random rational x, y", samples.size(), [&](std::size_t i) {
    auto& [y, x] = samples[i];
    DiffOp c = commutator(chart.eta_field(y), fam.op(x)) - fam.op(g.bracket(y, x));
    return c.is_zero() ? std::string() : op_witness("difference", c);
  });
}

void suite_commutativity(Engine& e, SuiteWriter& w) {
  const ExoticFamily& fam = e.family();
  const AlgebraSpec& g = e.spec();
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j) pairs.emplace_back(i, j);
  std::string scope = "all";
  if (e.cfg().pair_count && *e.cfg().pair_count < static_cast<int>(pairs.size())) {
    std::mt19937_64 rng(e.cfg().seed);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(static_cast<std::size_t>(*e.cfg().pair_count));
    std::sort(pairs.begin(), pairs.end());
    scope = "sampled";
  }
  w.sweep("pairs", "[D_x, D_y] = 0 on " + scope + " unordered basis pairs", pairs.size(), [&](std::size_t k) {
    auto [i, j] = pairs[k];
    DiffOp c = commutator(fam.by_basis[static_cast<std::size_t>(i)], fam.by_basis[static_cast<std::size_t>(j)]);
    return c.is_zero() ? std::string() : op_witness("[D_" + g.basis_name(i) + ", D_" + g.basis_name(j) + "]", c);
  });
  w.add("self", "[D0, D0] = 0", commutator(e.d0(), e.d0()).is_zero());
}

std::string vector_witness(const std::vector<Rational>& v) {
  std::string s = "x = (";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

void suite_gram(Engine& e, SuiteWriter& w, std::vector<GramResult>& grams) {
  const Chart& chart = e.chart();
  const ExoticFamily& fam = e.family();
  const AlgebraSpec& g = e.spec();
  auto one = OrbitFunctionExpr::constant(1);
  w.add("unit", "(1|1) = 1", pairing(chart, fam, one, one) == 1);
  auto fpsi = OrbitFunctionExpr::linear(g.x_psi());
  OrbitFunctionExpr power = one;
  Rational product(1);
  std::string bad;
  for (int p = 1; p <= 4; ++p) {
    power = power * fpsi;
    product *= expected_gamma(g, p);
    Rational got = pairing(chart, fam, power, power);
    if (got != product) bad = "p = " + std::to_string(p) + ": " + to_string(got) + " vs " + to_string(product);
  }
  w.add("f-psi-norms", "(f_psi^p | f_psi^p) = gamma(1)...gamma(p) for p <= 4", bad.empty(), bad);
  // Adjointness: (h | conj(f_b) k) = (D_b h | k).
  std::mt19937_64 rng(e.cfg().seed);
  std::uniform_int_distribution<int> pick(0, g.dim() - 1), deg(1, 3);
  auto mono = [&](int p) {
    OrbitFunctionExpr::Monomial m;
    for (int i = 0; i < p; ++i) m.push_back(pick(rng));
    return OrbitFunctionExpr::monomial(m);
  };
  struct Triple {
    int b;
    OrbitFunctionExpr h, k;
  };
  std::vector<Triple> triples;
  for (int t = 0; t < 50; ++t) {
    int p = deg(rng), b = pick(rng);
    OrbitFunctionExpr h = mono(p) + mono(p) * make_rational(-1, 3);
    triples.push_back({b, h, mono(p - 1)});
  }
  w.sweep("adjointness", "(h | conj(f_b) k) = (D_b h | k) on random triples", triples.size(), [&](std::size_t i) {
    const Triple& t = triples[i];
    Rational lhs = pairing(chart, fam, t.h, conjugate_expr(g, OrbitFunctionExpr::basis(t.b)) * t.k);
    Rational rhs = pairing(chart, fam, fam.by_basis[static_cast<std::size_t>(t.b)].apply(chart_expand(chart, t.h)), t.k);
    return lhs == rhs ? std::string()
                      : "b = " + g.basis_name(t.b) + ", h = " + t.h.to_string(g) + ", k = " + t.k.to_string(g) + ": " +
                            to_string(lhs) + " vs " + to_string(rhs);
  });
  // Empirical: conj(D_x(conj f)) = -D_{sigma x}(f) on degree-1 inputs.
  w.sweep("conjugate-family", "conj D_x conj = -D_{sigma x} on R_1 (empirical)", static_cast<std::size_t>(g.dim()),
          [&](std::size_t x) {
            for (int b = 0; b < g.dim(); ++b) {
              auto f = OrbitFunctionExpr::basis(b);
              LocalizedPoly lhs = fam.by_basis[x].apply(chart_expand(chart, conjugate_expr(g, f)));
              LocalizedPoly rhs = fam.op(g.sigma(g.basis(static_cast<int>(x)))).apply(chart_expand(chart, f));
              if (!lhs.is_constant() || lhs.constant_term() != -rhs.constant_term())
                return "x = " + g.basis_name(static_cast<int>(x)) + ", f = f_" + g.basis_name(b);
            }
            return std::string();
          });
  for (int p = 1; p <= e.cfg().gram_degree_max; ++p) {
    GramResult gr = gram_matrix(chart, fam, p, e.cfg().seed);
    const std::string tag = "p" + std::to_string(p);
    w.add(tag + ".symmetric", "Gram matrix on " + std::to_string(gr.monomials.size()) + " degree-" + std::to_string(p) + " monomials is symmetric",
          gr.symmetric);
    w.add(tag + ".psd", "Gram matrix is positive semidefinite", gr.ldl.psd, vector_witness(gr.ldl.witness));
    w.add(tag + ".rank", "rank " + std::to_string(gr.ldl.rank) + " equals the evaluation-oracle rank",
          gr.ldl.rank == gr.oracle_rank, "oracle rank " + std::to_string(gr.oracle_rank));
    w.add(tag + ".kernel", "every evaluation relation lies in the kernel", gr.relations_in_kernel);
    grams.push_back(std::move(gr));
  }
}

}  // namespace

const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> s{"model",         "chart",  "heisenberg", "build",         "q-solve", "eigenvalues",
                                          "lowest-weight", "symbol", "family",     "commutativity", "gram"};
  return s;
}

std::vector<std::string> parse_suites(const std::string& comma_list) {
  std::vector<std::string> out;
  if (comma_list.empty() || comma_list == "all") return all_suites();
  std::stringstream ss(comma_list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (std::find(all_suites().begin(), all_suites().end(), item) == all_suites().end())
      throw std::invalid_argument("unknown suite '" + item + "'");
    out.push_back(item);
  }
  // Dependency order regardless of the order given.
  std::vector<std::string> ordered;
  for (const auto& s : all_suites())
    if (std::find(out.begin(), out.end(), s) != out.end()) ordered.push_back(s);
  return ordered;
}

std::string status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

VerificationReport run(const SuiteConfig& config) {
  Engine engine(config);
  const AlgebraSpec& g = engine.spec();
  VerificationReport rep;
  rep.family = config.family;
  rep.N = config.N;
  rep.m = g.m();
  rep.dim_g = g.dim();
  rep.dim_orbit = g.orbit_dim();
  rep.config = config;
  std::vector<std::string> suites = config.suites.empty() ? all_suites() : config.suites;
  std::map<std::string, Status> status;
  using Runner = std::function<void(SuiteWriter&)>;
  std::map<std::string, Runner> runners{
      {"model", [&](SuiteWriter& w) { suite_model(engine, w); }},
      {"chart", [&](SuiteWriter& w) { suite_chart(engine, w); }},
      {"heisenberg", [&](SuiteWriter& w) { suite_heisenberg(engine, w); }},
      {"build", [&](SuiteWriter& w) { suite_build(engine, w); }},
      {"q-solve", [&](SuiteWriter& w) { suite_q(engine, w); }},
      {"eigenvalues", [&](SuiteWriter& w) { suite_eigen(engine, w); }},
      {"lowest-weight", [&](SuiteWriter& w) { suite_lowest(engine, w); }},
      {"symbol", [&](SuiteWriter& w) { suite_symbol(engine, w); }},
      {"family", [&](SuiteWriter& w) { suite_family(engine, w); }},
      {"commutativity", [&](SuiteWriter& w) { suite_commutativity(engine, w); }},
      {"gram", [&](SuiteWriter& w) { suite_gram(engine, w, rep.grams); }},
  };
  for (const auto& name : suites) {
    SuiteReport sr;
    sr.name = name;
    // A failed or skipped prerequisite that was run skips this suite.
    for (std::string pre = prerequisite().at(name); !pre.empty(); pre = prerequisite().at(pre)) {
      auto it = status.find(pre);
      if (it != status.end() && it->second != Status::pass) {
        sr.status = Status::skipped;
        sr.checks.push_back({name + ".prerequisite", "prerequisite suite '" + pre + "' did not pass", Status::skipped, ""});
        break;
      }
    }
    if (sr.status != Status::skipped) {
      auto start = std::chrono::steady_clock::now();
      SuiteWriter w(sr);
      try {
        runners.at(name)(w);
      } catch (const std::exception& ex) {
        w.add("exception", "suite raised an error", false, ex.what());
      }
      sr.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      bool ok = std::all_of(sr.checks.begin(), sr.checks.end(), [](const Check& c) { return c.status == Status::pass; });
      sr.status = ok ? Status::pass : Status::fail;
    }
    status[name] = sr.status;
    if (sr.status != Status::pass) rep.overall = Status::fail;
    rep.suites.push_back(std::move(sr));
  }
  return rep;
}

std::string VerificationReport::to_json(bool include_timings) const {
  using nlohmann::ordered_json;
  ordered_json j;
  j["schema"] = kReportSchema;
  j["metadata"] = {{"family", family_name(family)}, {"N", N}, {"m", m}, {"dim_g", dim_g}, {"dim_orbit", dim_orbit},
                   {"engine_version", kEngineVersion}};
  j["config"] = {{"k_max", config.k_max},
                 {"gram_degree_max", config.gram_degree_max},
                 {"seed", config.seed},
                 {"pairs", config.pair_count ? ordered_json(*config.pair_count) : ordered_json("all")}};
  ordered_json suites_json = ordered_json::array();
  for (const auto& s : suites) {
    ordered_json sj;
    sj["name"] = s.name;
    sj["status"] = status_name(s.status);
    if (include_timings) sj["wall_ms"] = s.wall_ms;
    ordered_json checks = ordered_json::array();
    for (const auto& c : s.checks) {
      ordered_json cj{{"id", c.id}, {"description", c.description}, {"status", status_name(c.status)}};
      if (!c.witness.empty()) cj["witness"] = c.witness;
      checks.push_back(cj);
    }
    sj["checks"] = checks;
    suites_json.push_back(sj);
  }
  j["suites"] = suites_json;
  if (!grams.empty()) {
    ordered_json gj = ordered_json::array();
    for (const auto& gr : grams) {
      ordered_json mat = ordered_json::array();
      for (const auto& row : gr.matrix) {
        ordered_json r = ordered_json::array();
        for (const auto& x : row) r.push_back(orbitweyl::to_string(x));
        mat.push_back(r);
      }
      ordered_json monos = ordered_json::array();
      for (const auto& mono : gr.monomials) monos.push_back(mono);
      gj.push_back({{"degree", gr.degree},
                    {"size", gr.monomials.size()},
                    {"rank", gr.ldl.rank},
                    {"oracle_rank", gr.oracle_rank},
                    {"psd", gr.ldl.psd},
                    {"monomials", monos},
                    {"matrix", mat}});
    }
    j["gram"] = gj;
  }
  j["overall"] = status_name(overall);
  return j.dump(2) + "\n";
}

std::string VerificationReport::to_text(bool include_timings) const {
  std::ostringstream os;
  os << family_name(family) << "(" << N << ")  m = " << m << "  dim g = " << dim_g << "  dim O = " << dim_orbit << "\n";
  for (const auto& s : suites) {
    os << "[" << status_name(s.status) << "] " << s.name;
    if (include_timings) os << "  (" << static_cast<long>(s.wall_ms) << " ms)";
    os << "\n";
    for (const auto& c : s.checks) {
      os << "    " << (c.status == Status::pass ? "ok  " : c.status == Status::fail ? "FAIL" : "skip") << "  " << c.id
         << "  " << c.description << "\n";
      if (!c.witness.empty()) os << "          witness: " << c.witness << "\n";
    }
  }
  os << "overall: " << status_name(overall) << "\n";
  return os.str();
}

std::string dump(const SuiteConfig& config, const std::string& object) {
  Engine e(config);
  if (object == "f_psi") return e.chart().f_psi().to_string() + "\n";
  if (object == "A") return e.builder().A().to_string() + "\n";
  if (object == "B" || object == "C") {
    if (config.family != Family::so) throw std::invalid_argument(object + " exists only for so");
    return (object == "B" ? e.builder().B() : e.builder().C()).to_string() + "\n";
  }
  if (object == "S") return e.S().to_string() + "\n";
  if (object == "D0") return e.d0().to_string() + "\n";
  if (object.rfind("gram:", 0) == 0) {
    int p = 0;
    try {
      p = std::stoi(object.substr(5));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad Gram degree in '" + object + "'");
    }
    if (p < 1) throw std::invalid_argument("Gram degree must be >= 1");
    return gram_matrix(e.chart(), e.family(), p, config.seed).to_csv();
  }
  throw std::invalid_argument("unknown object '" + object + "' (expected D0, A, B, C, S, f_psi or gram:p)");
}

}  // namespace orbitweyl
