#include "orbitweyl/chart.hpp"

#include <stdexcept>

namespace orbitweyl {

namespace {

LocalizedPoly var(int slot, int p = 1) { return LocalizedPoly::variable(slot, p); }

// sl: z = u v^T with u_0 = 1, so f_{E_ij} = u_j v_i / 2.
std::vector<LocalizedPoly> sl_functions(const AlgebraSpec& spec) {
  const int n = spec.N() - 1;
  const int m = spec.m();
  const LocalizedPoly a = quadratic_a(spec);
  const LocalizedPoly f0 = var(0), fp0 = var(1), inv = var(0, -1);
  std::vector<LocalizedPoly> u(static_cast<std::size_t>(n + 1)), v(static_cast<std::size_t>(n + 1));
  u[0] = LocalizedPoly(1);
  v[0] = fp0 - a * inv;
  for (int p = 1; p <= m; ++p) {
    u[static_cast<std::size_t>(p)] = var(slot_fp(p)) * inv;
    v[static_cast<std::size_t>(p)] = var(slot_f(p)) * Rational(2);
  }
  u[static_cast<std::size_t>(n)] = -(a + f0 * fp0) * var(0, -2) * make_rational(1, 2);
  v[static_cast<std::size_t>(n)] = f0 * Rational(2);
  std::vector<LocalizedPoly> out;
  for (int b = 0; b < spec.dim(); ++b) {
    LocalizedPoly f;
    for (const auto& [r, c, val] : spec.matrix_entries(b))
      f += u[static_cast<std::size_t>(c)] * v[static_cast<std::size_t>(r)] * (val / 2);
    out.push_back(std::move(f));
  }
  return out;
}

// so: z = u ^ v, f_{a^b} = ((a.v)(b.u) - (a.u)(b.v)) / 2. The pairings of
// u, v with the vector basis are fixed by the frame v_{n-1}.u = 1,
// v_n.u = 0, v_{n-1}.v = 0, v_n.v = 2 f0 and the isotropy conditions.
std::vector<LocalizedPoly> so_functions(const AlgebraSpec& spec) {
  const int n = spec.half_rank();
  const ChartLabels& L = spec.chart_labels();
  const LocalizedPoly a = quadratic_a(spec), b = quadratic_b(spec), c = quadratic_c(spec);
  const LocalizedPoly f0 = var(0), fp0 = var(1), inv = var(0, -1);
  std::vector<LocalizedPoly> pu(static_cast<std::size_t>(spec.N())), pv(static_cast<std::size_t>(spec.N()));
  auto at = [](std::vector<LocalizedPoly>& p, int idx) -> LocalizedPoly& { return p[static_cast<std::size_t>(idx)]; };
  at(pu, spec.vec_v(n - 1)) = LocalizedPoly(1);
  at(pv, spec.vec_v(n)) = f0 * Rational(2);
  for (int i = 1; i <= n - 2; ++i) {
    const std::size_t k = static_cast<std::size_t>(i - 1);
    at(pu, spec.vec_v(i)) = -var(slot_f(L.xt[k])) * inv;
    at(pv, spec.vec_v(i)) = var(slot_f(L.x[k])) * Rational(2);
    at(pu, spec.vec_vp(i)) = -var(slot_fp(L.xp[k])) * inv;
    at(pv, spec.vec_vp(i)) = -var(slot_fp(L.xtp[k])) * Rational(2);
  }
  if (spec.odd()) {
    at(pu, spec.vec_v0()) = -var(slot_f(L.xt0)) * inv;
    at(pv, spec.vec_v0()) = -var(slot_fp(L.xtp0)) * Rational(2);
  }
  at(pu, spec.vec_vp(n - 1)) = -c * var(0, -2);
  at(pv, spec.vec_vp(n - 1)) = a * inv - fp0;
  at(pu, spec.vec_vp(n)) = (a + f0 * fp0) * var(0, -2) * make_rational(1, 2);
  at(pv, spec.vec_vp(n)) = b * inv * Rational(2);
  std::vector<LocalizedPoly> out;
  for (int i = 0; i < spec.dim(); ++i) {
    auto [x, y] = spec.wedge(i);
    out.push_back((at(pv, x) * at(pu, y) - at(pu, x) * at(pv, y)) * make_rational(1, 2));
  }
  return out;
}

}  // namespace

Chart::Chart(AlgebraPtr spec) : spec_(std::move(spec)) {
  if (!spec_) throw std::invalid_argument("Chart: null algebra");
  functions_ = spec_->family() == Family::sl ? sl_functions(*spec_) : so_functions(*spec_);
  for (int i = 0; i < spec_->dim(); ++i) etas_.push_back(eta_field(spec_->basis(i)));
  f_psi_ = orbit_function(spec_->x_psi());
  eta_h_ = eta_field(spec_->h());
  eta_x0_ = eta_field(spec_->x0());
}

LocalizedPoly Chart::orbit_function(const LieElement& y) const {
  if (y.dim() != spec_->dim()) throw std::invalid_argument("orbit_function: element of another algebra");
  LocalizedPoly f;
  for (int i = 0; i < y.dim(); ++i)
    if (sgn(y[i]) != 0) f += functions_[static_cast<std::size_t>(i)] * y[i];
  return f;
}

LocalizedPoly Chart::f_psi_from_P() const {
  return compute_P(*spec_) * var(0, -3) - var(1, 2) * var(0, -1) * make_rational(1, 4);
}

DiffOp Chart::eta_field(const LieElement& y) const {
  DiffOp::Map terms;
  for (int slot = 0; slot < slots(); ++slot) {
    LocalizedPoly c = orbit_function(spec_->bracket(y, spec_->coordinate(slot)));
    if (!c.is_zero()) terms.emplace(DerivMultiIndex::unit(slot), std::move(c));
  }
  return DiffOp::from_map(std::move(terms));
}

DiffOp Chart::delta_field(int i, bool primed) const {
  if (i < 1 || i > spec_->m()) throw std::out_of_range("delta_field: index outside 1..m");
  const int slot = primed ? slot_fp(i) : slot_f(i);
  return eta_field(spec_->coordinate(slot)) - eta_x0_.left_multiply(var(slot) * var(0, -1));
}

DiffOp Chart::euler_field() const {
  DiffOp::Map terms;
  for (int slot = 0; slot < slots(); ++slot) terms.emplace(DerivMultiIndex::unit(slot), var(slot));
  return DiffOp::from_map(std::move(terms));
}

std::vector<Rational> Chart::chart_point(const std::vector<Rational>& basis_values) const {
  std::vector<Rational> pt;
  for (int slot = 0; slot < slots(); ++slot) {
    const LieElement& e = spec_->coordinate(slot);
    Rational v(0);
    for (int i = 0; i < e.dim(); ++i) v += e[i] * basis_values[static_cast<std::size_t>(i)];
    pt.push_back(v);
  }
  return pt;
}

namespace {

Rational small(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-6, 6);
  return Rational(d(rng));
}

std::vector<Rational> random_sl_point(const AlgebraSpec& spec, std::mt19937_64& rng) {
  const int N = spec.N();
  const int n = N - 1;
  for (;;) {
    std::vector<Rational> u(static_cast<std::size_t>(N)), v(static_cast<std::size_t>(N));
    for (auto& x : u) x = small(rng);
    for (auto& x : v) x = small(rng);
    if (sgn(u[0]) == 0 || sgn(v[static_cast<std::size_t>(n)]) == 0) continue;
    Rational s(0);
    for (int j = 1; j < N; ++j) s += u[static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(j)];
    v[0] = -s / u[0];  // v.u = 0, so z = u v^T squares to zero
    std::vector<Rational> vals;
    for (int b = 0; b < spec.dim(); ++b) {
      Rational f(0);
      // f_y(z) = Tr(y z) / 2 with z_{cr} = u_c v_r
      for (const auto& [r, c, val] : spec.matrix_entries(b))
        f += val * u[static_cast<std::size_t>(c)] * v[static_cast<std::size_t>(r)];
      vals.push_back(f / 2);
    }
    return vals;
  }
}

std::vector<Rational> random_so_point(const AlgebraSpec& spec, std::mt19937_64& rng) {
  const int n = spec.half_rank();
  const std::size_t N = static_cast<std::size_t>(spec.N());
  // p[a] = e_a . w determines w; w.w' = sum_j (p[v_j] p'[v'_j] + p[v'_j] p'[v_j]) + p[v0] p'[v0].
  auto form = [&](const std::vector<Rational>& p, const std::vector<Rational>& q) {
    Rational s(0);
    for (int j = 1; j <= n; ++j) {
      auto vj = static_cast<std::size_t>(spec.vec_v(j)), vpj = static_cast<std::size_t>(spec.vec_vp(j));
      s += p[vj] * q[vpj] + p[vpj] * q[vj];
    }
    if (spec.odd()) s += p[static_cast<std::size_t>(spec.vec_v0())] * q[static_cast<std::size_t>(spec.vec_v0())];
    return s;
  };
  const auto v1 = static_cast<std::size_t>(spec.vec_v(1)), vp1 = static_cast<std::size_t>(spec.vec_vp(1));
  const auto v2 = static_cast<std::size_t>(spec.vec_v(2)), vp2 = static_cast<std::size_t>(spec.vec_vp(2));
  for (;;) {
    std::vector<Rational> pu(N), pv(N);
    for (auto& x : pu) x = small(rng);
    for (auto& x : pv) x = small(rng);
    if (sgn(pu[v1]) == 0) continue;
    // u.u is linear in pu[vp1] with slope 2 pu[v1].
    pu[vp1] = 0;
    pu[vp1] = -form(pu, pu) / (2 * pu[v1]);
    // v.v = 0 and u.v = 0 are linear in (pv[vp1], pv[vp2]).
    pv[vp1] = 0;
    pv[vp2] = 0;
    Rational a11 = 2 * pv[v1], a12 = 2 * pv[v2], r1 = -form(pv, pv);
    Rational a21 = pu[v1], a22 = pu[v2], r2 = -form(pu, pv);
    Rational det = a11 * a22 - a12 * a21;
    if (sgn(det) == 0) continue;
    pv[vp1] = (r1 * a22 - a12 * r2) / det;
    pv[vp2] = (a11 * r2 - a21 * r1) / det;
    if (form(pu, pu) != 0 || form(pv, pv) != 0 || form(pu, pv) != 0)
      throw std::logic_error("random_so_point: isotropy solve failed");
    std::vector<Rational> vals;
    for (int i = 0; i < spec.dim(); ++i) {
      auto [x, y] = spec.wedge(i);
      auto xs = static_cast<std::size_t>(x), ys = static_cast<std::size_t>(y);
      vals.push_back((pv[xs] * pu[ys] - pu[xs] * pv[ys]) / 2);
    }
    // Keep only points of the chart domain.
    Rational f0(0);
    const LieElement& x0 = spec.x0();
    for (int i = 0; i < spec.dim(); ++i) f0 += x0[i] * vals[static_cast<std::size_t>(i)];
    if (sgn(f0) == 0) continue;
    return vals;
  }
}

}  // namespace

std::vector<Rational> random_orbit_point(const AlgebraSpec& spec, std::mt19937_64& rng) {
  return spec.family() == Family::sl ? random_sl_point(spec, rng) : random_so_point(spec, rng);
}

}  // namespace orbitweyl
