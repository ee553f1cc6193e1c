#include "orbitweyl/exotic.hpp"

#include <map>
#include <stdexcept>

#include "orbitweyl/linalg.hpp"

namespace orbitweyl {

namespace {

LocalizedPoly var(int slot, int p = 1) { return LocalizedPoly::variable(slot, p); }

Rational half_m(const AlgebraSpec& spec) { return make_rational(spec.m(), 2); }

// Coefficient vectors of polynomials over the union of their monomials.
Matrix monomial_columns(const std::vector<const LocalizedPoly*>& cols, std::vector<Rational>* rhs,
                        const LocalizedPoly* target) {
  std::map<ChartMonomial, std::size_t> rows;
  auto row_of = [&](const ChartMonomial& m) {
    auto [it, inserted] = rows.emplace(m, rows.size());
    return it->second;
  };
  for (const auto* p : cols)
    for (const auto& t : p->terms()) row_of(t.first);
  if (target)
    for (const auto& t : target->terms()) row_of(t.first);
  Matrix a(rows.size(), std::vector<Rational>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (const auto& [m, c] : cols[j]->terms()) a[rows[m]][j] = c;
  if (rhs) {
    rhs->assign(rows.size(), Rational(0));
    if (target)
      for (const auto& [m, c] : target->terms()) (*rhs)[rows[m]] = c;
  }
  return a;
}

}  // namespace

int CorrectionPoly::degree() const {
  for (int i = 2; i >= 0; --i)
    if (sgn(c[static_cast<std::size_t>(i)]) != 0) return i;
  return -1;
}

std::string CorrectionPoly::to_string() const {
  std::string out;
  bool first = true;
  for (int i = 2; i >= 0; --i) {
    const Rational& v = c[static_cast<std::size_t>(i)];
    if (sgn(v) == 0) continue;
    std::string body = i == 0 ? "" : (i == 1 ? "E" : "E^2");
    out += format_term(v, body, first);
    first = false;
  }
  return first ? "0" : out;
}

CorrectionPoly expected_q(const AlgebraSpec& spec) {
  const Rational h = half_m(spec);
  CorrectionPoly q;
  q.c[2] = 1;
  q.c[1] = 2 * h;
  q.c[0] = spec.family() == Family::sl ? Rational(h * h) : Rational(h * h - 1);
  return q;
}

Rational expected_gamma(const AlgebraSpec& spec, int k) {
  const Rational K(k), h = half_m(spec);
  if (spec.family() == Family::sl) return K * K * (K + (Rational(spec.m()) - 1) / 2) * (K + h);
  return K * (K + 1) * (K + h - 1) * (K + h - make_rational(1, 2));
}

Rational expected_t(const AlgebraSpec& spec, int k) {
  const Rational K(k), h = half_m(spec);
  return spec.family() == Family::sl ? Rational(K * (K + h)) : Rational(K * (K + h - 1));
}

ExoticBuilder::ExoticBuilder(const Chart& chart) : chart_(chart) {
  const AlgebraSpec& g = chart.spec();
  auto delta = [&](int i, bool primed) { return chart.delta_field(i, primed); };
  auto sym = [](const DiffOp& x, const DiffOp& y) { return x * y + y * x; };
  const Rational half = make_rational(1, 2);
  if (g.family() == Family::sl) {
    for (int i = 1; i <= g.m(); ++i) A_ += sym(delta(i, false), delta(i, true)) * half;
    return;
  }
  const ChartLabels& L = g.chart_labels();
  for (std::size_t k = 0; k < L.x.size(); ++k) {
    A_ += sym(delta(L.x[k], false), delta(L.xp[k], true)) * half;
    A_ -= sym(delta(L.xt[k], false), delta(L.xtp[k], true)) * half;
    B_ += delta(L.x[k], false) * delta(L.xtp[k], true);
    C_ += delta(L.xt[k], false) * delta(L.xp[k], true);
  }
  if (L.xt0 > 0) {
    DiffOp t0 = delta(L.xt0, false), tp0 = delta(L.xtp0, true);
    A_ -= sym(t0, tp0) * half;
    B_ -= tp0 * tp0 * half;
    C_ += t0 * t0 * half;
  }
}

const DiffOp& ExoticBuilder::B() const {
  if (chart_.spec().family() != Family::so) throw std::invalid_argument("B is defined for so only");
  return B_;
}

const DiffOp& ExoticBuilder::C() const {
  if (chart_.spec().family() != Family::so) throw std::invalid_argument("C is defined for so only");
  return C_;
}

DiffOp ExoticBuilder::main_term() const {
  DiffOp m = A_ * A_;
  if (chart_.spec().family() == Family::so) m += (B_ * C_ + C_ * B_) * Rational(2);
  return m;
}

LocalizedPoly ExoticBuilder::apply_main(const LocalizedPoly& g) const {
  LocalizedPoly r = A_.apply(A_.apply(g));
  if (chart_.spec().family() == Family::so) r += (B_.apply(C_.apply(g)) + C_.apply(B_.apply(g))) * Rational(2);
  return r;
}

DiffOp ExoticBuilder::q_operator(const CorrectionPoly& q) const {
  DiffOp e = chart_.euler_field();
  return DiffOp::identity() * q.c[0] + e * q.c[1] + (e * e) * q.c[2];
}

DiffOp ExoticBuilder::build_S(const CorrectionPoly& q) const {
  const DiffOp& eta = chart_.eta_x0();
  return (main_term() - q_operator(q) * (eta * eta)) * make_rational(1, 4);
}

DiffOp ExoticBuilder::build_D0(const CorrectionPoly& q) const {
  return build_S(q).left_multiply(var(0, -1));
}

QSolveResult ExoticBuilder::solve_q(int max_k) const {
  if (max_k < 4) throw std::invalid_argument("solve_q needs max_k >= 4");
  QSolveResult res;
  const DiffOp& eta = chart_.eta_x0();
  const LocalizedPoly& fpsi = chart_.f_psi();
  LocalizedPoly power = fpsi;  // f_psi^(k-1)
  for (int k = 2; k <= max_k; ++k) {
    LocalizedPoly target = var(0) * power;  // f0 f_psi^(k-1)
    power = power * fpsi;
    LocalizedPoly main = apply_main(power);
    LocalizedPoly n = eta.apply(eta.apply(power));
    std::vector<Rational> rhs;
    Matrix a = monomial_columns({&n, &target}, &rhs, &main);
    if (rank(a) != 2) {
      res.failing_k = k;
      res.error = "q(k) is not uniquely determined at k = " + std::to_string(k);
      return res;
    }
    auto sol = solve(a, rhs);
    if (!sol) {
      res.failing_k = k;
      res.error = "no admissible q(k) at k = " + std::to_string(k);
      res.residual = main;
      return res;
    }
    res.samples.push_back((*sol)[0]);
    res.gammas.push_back((*sol)[1] / 4);
  }
  // Interpolate through k = 2, 3, 4 and check the remaining samples.
  Matrix vand;
  std::vector<Rational> ys;
  for (int i = 0; i < 3; ++i) {
    Rational k(i + 2);
    vand.push_back({Rational(1), k, k * k});
    ys.push_back(res.samples[static_cast<std::size_t>(i)]);
  }
  auto coeffs = solve(vand, ys);
  for (int i = 0; i < 3; ++i) res.q.c[static_cast<std::size_t>(i)] = (*coeffs)[static_cast<std::size_t>(i)];
  for (int k = 2; k <= max_k; ++k) {
    if (res.q(Rational(k)) != res.samples[static_cast<std::size_t>(k - 2)]) {
      res.failing_k = k;
      res.error = "interpolant of degree <= 2 does not reproduce q(" + std::to_string(k) + ")";
      return res;
    }
  }
  res.ok = true;
  return res;
}

LocalizedPoly ExoticBuilder::divisibility_defect(const CorrectionPoly& q, int k, const Rational& shift) const {
  const DiffOp& eta = chart_.eta_x0();
  const LocalizedPoly& fpsi = chart_.f_psi();
  LocalizedPoly pk = fpsi.pow(static_cast<unsigned>(k));
  LocalizedPoly target = var(0) * fpsi.pow(static_cast<unsigned>(k - 1));
  LocalizedPoly r = apply_main(pk) - eta.apply(eta.apply(pk)) * (q(Rational(k)) + shift);
  // Remove the multiple of the target matching its first monomial.
  const auto& lead = target.terms().front();
  return r - target * (r.coefficient(lead.first) / lead.second);
}

SymbolPoly ExoticBuilder::theta(int slot) const {
  if (slot < 2) throw std::out_of_range("theta is defined for g_{-1} coordinates");
  return principal_symbol(chart_.delta_field(slot / 2, slot % 2 == 1));
}

SymbolPoly ExoticBuilder::lambda() const { return principal_symbol(chart_.euler_field()); }

SymbolPoly ExoticBuilder::phi_x0() const { return principal_symbol(chart_.eta_x0()); }

SymbolPoly ExoticBuilder::substitute_theta(const LocalizedPoly& p) const {
  std::vector<std::vector<SymbolPoly>> powers(static_cast<std::size_t>(chart_.slots()));
  auto pw = [&](int slot, int e) -> const SymbolPoly& {
    auto& list = powers[static_cast<std::size_t>(slot)];
    if (list.empty()) list.push_back(SymbolPoly(LocalizedPoly(1)));
    while (static_cast<int>(list.size()) <= e) list.push_back(list.back() * theta(slot));
    return list[static_cast<std::size_t>(e)];
  };
  SymbolPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (m[0] != 0 || m[1] != 0) throw std::invalid_argument("substitute_theta: f0 / fp0 in a w-polynomial");
    SymbolPoly t{LocalizedPoly(c)};
    for (int s = 2; s < chart_.slots(); ++s)
      if (m[s] > 0) t = t * pw(s, m[s]);
    out += t;
  }
  return out;
}

SymbolPoly ExoticBuilder::r0() const {
  SymbolPoly l = lambda(), phi = phi_x0();
  SymbolPoly inner = substitute_theta(compute_P(chart_.spec())) - l * l * phi * phi * make_rational(1, 4);
  return SymbolPoly(var(0, -1)) * inner;
}

std::vector<Rational> interpolate(const std::vector<Rational>& values, int degree) {
  Matrix vand;
  std::vector<Rational> ys;
  for (std::size_t k = 0; k < values.size(); ++k) {
    std::vector<Rational> row;
    Rational p(1);
    for (int d = 0; d <= degree; ++d) {
      row.push_back(p);
      p *= static_cast<long>(k);
    }
    vand.push_back(std::move(row));
    ys.push_back(values[k]);
  }
  auto sol = solve(vand, ys);
  if (!sol) return {};
  return *sol;
}

EigenResult eigenvalue_sequence(const Chart& chart, const DiffOp& d0, int k_max) {
  EigenResult res;
  const LocalizedPoly& fpsi = chart.f_psi();
  LocalizedPoly prev(1);  // f_psi^(k-1)
  LocalizedPoly cur(1);   // f_psi^k
  for (int k = 0; k <= k_max; ++k) {
    LocalizedPoly img = d0.apply(cur);
    if (k == 0) {
      if (!img.is_zero()) {
        res.failing_k = 0;
        return res;
      }
      res.values.emplace_back(0);
    } else {
      auto c = scalar_multiple(img, prev);
      if (!c) {
        res.failing_k = k;
        return res;
      }
      res.values.push_back(*c);
      prev = cur;
    }
    cur = cur * fpsi;
  }
  return res;
}

DiffOp ExoticFamily::op(const LieElement& x) const {
  DiffOp out;
  for (int i = 0; i < x.dim(); ++i)
    if (sgn(x[i]) != 0) out += by_basis[static_cast<std::size_t>(i)] * x[i];
  return out;
}

namespace {

std::map<int, Rational> sparse(const LieElement& x) {
  std::map<int, Rational> v;
  for (int i = 0; i < x.dim(); ++i)
    if (sgn(x[i]) != 0) v.emplace(i, x[i]);
  return v;
}

std::string path_string(const AlgebraSpec& g, const std::vector<int>& path) {
  std::string s = "x0";
  for (int y : path) s = "[" + g.basis_name(y) + ", " + s + "]";
  return s;
}

}  // namespace

ExoticFamily generate_family(const Chart& chart, const DiffOp& d0) {
  const AlgebraSpec& g = chart.spec();
  ExoticFamily fam;
  fam.spec = chart.spec_ptr();
  SpanTracker<int> span;
  span.add(sparse(g.x0()));
  fam.members.push_back({g.x0(), d0, {}});
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    for (int y = 0; y < g.dim(); ++y) {
      LieElement x = g.bracket(g.basis(y), fam.members[i].x);
      DiffOp op = commutator(chart.basis_eta(y), fam.members[i].op);
      std::vector<int> path = fam.members[i].path;
      path.push_back(y);
      if (x.is_zero()) {
        if (!op.is_zero()) {
          fam.path_independent = false;
          fam.error = "bracket " + path_string(g, path) + " vanishes but the operator does not";
          return fam;
        }
        continue;
      }
      std::vector<Rational> coeffs;
      if (span.add(sparse(x), &coeffs)) {
        fam.members.push_back({std::move(x), std::move(op), std::move(path)});
        continue;
      }
      DiffOp expected;
      for (std::size_t j = 0; j < coeffs.size(); ++j)
        if (sgn(coeffs[j]) != 0) expected += fam.members[j].op * coeffs[j];
      if (expected != op) {
        fam.path_independent = false;
        fam.error = "path " + path_string(g, path) + " disagrees with the span of earlier members";
        return fam;
      }
    }
  }
  fam.span_dim = span.size();
  if (fam.span_dim != g.dim()) {
    fam.error = "closure spans " + std::to_string(fam.span_dim) + " dimensions, expected " + std::to_string(g.dim());
    return fam;
  }
  for (int b = 0; b < g.dim(); ++b) {
    auto coeffs = span.express(sparse(g.basis(b)));
    DiffOp op;
    for (std::size_t j = 0; j < coeffs->size(); ++j)
      if (sgn((*coeffs)[j]) != 0) op += fam.members[j].op * (*coeffs)[j];
    fam.by_basis.push_back(std::move(op));
  }
  fam.ok = true;
  return fam;
}

}  // namespace orbitweyl
