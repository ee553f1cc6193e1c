#include "orbitweyl/lie_model.hpp"

#include <algorithm>

#include "orbitweyl/linalg.hpp"

namespace orbitweyl {

std::string family_name(Family f) { return f == Family::sl ? "sl" : "so"; }

Family parse_family(const std::string& name) {
  if (name == "sl") return Family::sl;
  if (name == "so") return Family::so;
  if (name == "sp")
    throw UnsupportedAlgebra(
        "sp is not supported: the quartic P vanishes identically on g_{-1} for sp(2n), "
        "so there is no exotic operator to construct");
  throw UnsupportedAlgebra("unknown family '" + name + "' (expected sl or so)");
}

LieElement LieElement::unit(int dim, int i, const Rational& c) {
  LieElement e = zero(dim);
  e.coeffs_.at(static_cast<std::size_t>(i)) = c;
  return e;
}

bool LieElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

LieElement& LieElement::operator+=(const LieElement& o) {
  if (o.dim() != dim()) throw std::invalid_argument("LieElement: mixed algebras");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  if (o.dim() != dim()) throw std::invalid_argument("LieElement: mixed algebras");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

LieElement& LieElement::operator*=(const Rational& c) {
  for (auto& v : coeffs_) v *= c;
  return *this;
}

LieElement AlgebraSpec::bracket(const LieElement& x, const LieElement& y) const {
  if (x.dim() != dim() || y.dim() != dim()) throw std::invalid_argument("bracket: element of another algebra");
  LieElement r = LieElement::zero(dim());
  std::vector<Rational> acc(static_cast<std::size_t>(dim()));
  for (int i = 0; i < dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (int j = 0; j < dim(); ++j) {
      if (sgn(y[j]) == 0) continue;
      Rational c = x[i] * y[j];
      for (const auto& t : bracket_basis(i, j)) acc[static_cast<std::size_t>(t.index)] += c * t.coef;
    }
  }
  return LieElement(std::move(acc));
}

std::vector<LocalizedPoly> AlgebraSpec::bracket(const std::vector<LocalizedPoly>& x,
                                                const std::vector<LocalizedPoly>& y) const {
  std::vector<LocalizedPoly> acc(static_cast<std::size_t>(dim()));
  for (int i = 0; i < dim(); ++i) {
    if (x[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < dim(); ++j) {
      if (y[static_cast<std::size_t>(j)].is_zero()) continue;
      LocalizedPoly c = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
      for (const auto& t : bracket_basis(i, j)) acc[static_cast<std::size_t>(t.index)] += c * t.coef;
    }
  }
  return acc;
}

Rational AlgebraSpec::killing(const LieElement& x, const LieElement& y) const {
  if (x.dim() != dim() || y.dim() != dim()) throw std::invalid_argument("killing: element of another algebra");
  Rational s(0);
  for (int i = 0; i < dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (int j = 0; j < dim(); ++j)
      if (sgn(y[j]) != 0) s += x[i] * y[j] * killing_basis(i, j);
  }
  return s;
}

LieElement AlgebraSpec::sigma(const LieElement& x) const {
  if (x.dim() != dim()) throw std::invalid_argument("sigma: element of another algebra");
  LieElement r = LieElement::zero(dim());
  std::vector<Rational> c(static_cast<std::size_t>(dim()));
  for (int i = 0; i < dim(); ++i) {
    auto [j, s] = sigma_basis(i);
    c[static_cast<std::size_t>(j)] += x[i] * s;
  }
  return LieElement(std::move(c));
}

std::vector<int> AlgebraSpec::basis_of_grade(int k) const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i)
    if (grade(i) == k) out.push_back(i);
  return out;
}

std::vector<int> AlgebraSpec::negative_basis() const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i)
    if (grade(i) < 0) out.push_back(i);
  return out;
}

int AlgebraSpec::dot(int a, int b) const {
  const int n = half_rank();
  if (odd() && a == 2 * n && b == 2 * n) return 1;
  if (a >= 2 * n || b >= 2 * n) return 0;
  return (a / 2 == b / 2 && a != b) ? 1 : 0;
}

std::string AlgebraSpec::vector_name(int a) const {
  if (odd() && a == vec_v0()) return "v0";
  return (a % 2 == 0 ? "v" : "vp") + std::to_string(a / 2 + 1);
}

int AlgebraSpec::find_wedge(int a, int b) const {
  auto it = std::find(wedges_.begin(), wedges_.end(), std::make_pair(a, b));
  if (it == wedges_.end()) throw std::logic_error("wedge not in basis");
  return static_cast<int>(it - wedges_.begin());
}

void AlgebraSpec::build_sl() {
  const int N = N_;
  const int n = N - 1;
  m_ = n - 1;
  using Mat = std::vector<std::vector<Rational>>;
  std::vector<Mat> mats;
  auto zero_mat = [N]() { return Mat(static_cast<std::size_t>(N), std::vector<Rational>(static_cast<std::size_t>(N))); };
  std::vector<std::vector<int>> offdiag(static_cast<std::size_t>(N), std::vector<int>(static_cast<std::size_t>(N), -1));
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      if (i == j) continue;
      offdiag[i][j] = static_cast<int>(names_.size());
      names_.push_back("E" + std::to_string(i) + std::to_string(j));
      matrix_entries_.push_back({{i, j, Rational(1)}});
    }
  }
  for (int i = 0; i < n; ++i) {
    names_.push_back("H" + std::to_string(i));
    matrix_entries_.push_back({{i, i, Rational(1)}, {i + 1, i + 1, Rational(-1)}});
  }
  const int d = dim();
  for (int b = 0; b < d; ++b) {
    Mat mat = zero_mat();
    for (const auto& [r, c, v] : matrix_entries_[static_cast<std::size_t>(b)]) mat[r][c] += v;
    mats.push_back(std::move(mat));
  }
  auto mul = [&](const Mat& a, const Mat& b) {
    Mat r = zero_mat();
    for (int i = 0; i < N; ++i)
      for (int k = 0; k < N; ++k) {
        if (sgn(a[i][k]) == 0) continue;
        for (int j = 0; j < N; ++j) r[i][j] += a[i][k] * b[k][j];
      }
    return r;
  };
  auto decompose = [&](const Mat& x) {
    std::vector<StructureTerm> out;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        if (i != j && sgn(x[i][j]) != 0) out.push_back({offdiag[i][j], x[i][j]});
    Rational running(0);
    for (int i = 0; i < n; ++i) {
      running += x[i][i];
      if (sgn(running) != 0) out.push_back({N * (N - 1) + i, running});
    }
    if (running + x[n][n] != 0) throw std::logic_error("sl: bracket left the traceless matrices");
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
    return out;
  };
  table_.resize(static_cast<std::size_t>(d * d));
  killing_.assign(static_cast<std::size_t>(d * d), Rational(0));
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      Mat ab = mul(mats[a], mats[b]);
      Mat ba = mul(mats[b], mats[a]);
      Rational tr(0);
      for (int i = 0; i < N; ++i) {
        tr += ab[i][i];
        for (int j = 0; j < N; ++j) ab[i][j] -= ba[i][j];
      }
      table_[static_cast<std::size_t>(a * d + b)] = decompose(ab);
      killing_[static_cast<std::size_t>(a * d + b)] = tr / 2;
    }
  }
  // sigma(X) = -X^*: E_ij -> -E_ji, H_i -> -H_i.
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (i != j) sigma_.emplace_back(offdiag[j][i], -1);
  for (int i = 0; i < n; ++i) sigma_.emplace_back(N * (N - 1) + i, -1);

  x_psi_ = basis(offdiag[0][n]);
  LieElement h = LieElement::zero(d);
  for (int i = 0; i < n; ++i) h += basis(N * (N - 1) + i);
  coordinates_ = {basis(offdiag[n][0]), h};
  labels_ = {"x0", "x'0"};
  for (int p = 1; p <= m_; ++p) {
    coordinates_.push_back(basis(offdiag[p][0]));  // x_p = E_{p,0}
    coordinates_.push_back(basis(offdiag[n][p]));  // x'_p = E_{n,p}
    labels_.push_back("x" + std::to_string(p));
    labels_.push_back("x'" + std::to_string(p));
    chart_labels_.x.push_back(p);
    chart_labels_.xp.push_back(p);
  }
}

void AlgebraSpec::build_so() {
  const int N = N_;
  const int n = N / 2;
  m_ = N - 4;
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b) {
      wedges_.emplace_back(a, b);
      names_.push_back(vector_name(a) + "^" + vector_name(b));
    }
  const int d = dim();
  // Signed basis element for e_a ^ e_b.
  auto wedge_term = [&](int a, int b, Rational c, std::vector<StructureTerm>& out) {
    if (a == b || sgn(c) == 0) return;
    if (a > b) {
      std::swap(a, b);
      c = -c;
    }
    int idx = find_wedge(a, b);
    for (auto& t : out)
      if (t.index == idx) {
        t.coef += c;
        return;
      }
    out.push_back({idx, c});
  };
  table_.resize(static_cast<std::size_t>(d * d));
  killing_.assign(static_cast<std::size_t>(d * d), Rational(0));
  for (int i = 0; i < d; ++i) {
    auto [a, b] = wedges_[static_cast<std::size_t>(i)];
    for (int j = 0; j < d; ++j) {
      auto [c, e] = wedges_[static_cast<std::size_t>(j)];
      // [a^b, c^e] = (a.c) b^e + (b.e) a^c - (a.e) b^c - (b.c) a^e
      std::vector<StructureTerm> out;
      wedge_term(b, e, dot(a, c), out);
      wedge_term(a, c, dot(b, e), out);
      wedge_term(b, c, -dot(a, e), out);
      wedge_term(a, e, -dot(b, c), out);
      out.erase(std::remove_if(out.begin(), out.end(), [](const auto& t) { return sgn(t.coef) == 0; }), out.end());
      std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.index < y.index; });
      table_[static_cast<std::size_t>(i * d + j)] = std::move(out);
      // (a^b, c^e) = 1/2 [(a.e)(b.c) - (a.c)(b.e)]
      killing_[static_cast<std::size_t>(i * d + j)] =
          make_rational(dot(a, e) * dot(b, c) - dot(a, c) * dot(b, e), 2);
    }
  }
  // sigma swaps v_i and v'_i and fixes v_0.
  auto sv = [&](int a) { return (odd() && a == vec_v0()) ? a : (a ^ 1); };
  for (int i = 0; i < d; ++i) {
    auto [a, b] = wedges_[static_cast<std::size_t>(i)];
    int sa = sv(a), sb = sv(b);
    if (sa < sb) {
      sigma_.emplace_back(find_wedge(sa, sb), 1);
    } else {
      sigma_.emplace_back(find_wedge(sb, sa), -1);
    }
  }
  auto elem = [&](int a, int b, int c) {
    std::vector<StructureTerm> out;
    wedge_term(a, b, Rational(c), out);
    LieElement e = LieElement::zero(d);
    for (const auto& t : out) e += basis(t.index) * t.coef;
    return e;
  };
  const int vn1 = vec_v(n - 1), vn = vec_v(n), vpn1 = vec_vp(n - 1), vpn = vec_vp(n);
  x_psi_ = elem(vpn1, vpn, 1);
  coordinates_ = {elem(vn1, vn, -1), elem(vn1, vpn1, 1) + elem(vn, vpn, 1)};
  labels_ = {"x0", "x'0"};
  std::vector<LieElement> xs, xps;
  for (int i = 1; i <= n - 2; ++i) {
    xs.push_back(elem(vec_v(i), vn1, 1));
    xps.push_back(elem(vec_vp(i), vn, 1));
    labels_.push_back("x" + std::to_string(i));
    labels_.push_back("x'" + std::to_string(i));
    chart_labels_.x.push_back(static_cast<int>(xs.size()));
    chart_labels_.xp.push_back(static_cast<int>(xps.size()));
  }
  if (odd()) {
    xs.push_back(elem(vec_v0(), vn, 1));
    xps.push_back(elem(vec_v0(), vn1, -1));
    labels_.push_back("xt0");
    labels_.push_back("xt'0");
    chart_labels_.xt0 = static_cast<int>(xs.size());
    chart_labels_.xtp0 = static_cast<int>(xps.size());
  }
  for (int i = 1; i <= n - 2; ++i) {
    xs.push_back(elem(vec_v(i), vn, 1));
    xps.push_back(elem(vec_vp(i), vn1, -1));
    labels_.push_back("xt" + std::to_string(i));
    labels_.push_back("xt'" + std::to_string(i));
    chart_labels_.xt.push_back(static_cast<int>(xs.size()));
    chart_labels_.xtp.push_back(static_cast<int>(xps.size()));
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    coordinates_.push_back(xs[i]);
    coordinates_.push_back(xps[i]);
  }
}

void AlgebraSpec::finish() {
  const int d = dim();
  grade_.assign(static_cast<std::size_t>(d), 0);
  for (int i = 0; i < d; ++i) {
    LieElement e = basis(i);
    LieElement img = bracket(h(), e);
    int g = 0;
    bool found = false;
    for (int k = -2; k <= 2 && !found; ++k) {
      if (img == e * Rational(k)) {
        g = k;
        found = true;
      }
    }
    if (!found) throw std::logic_error("ad(h) is not diagonal on basis element " + basis_name(i));
    grade_[static_cast<std::size_t>(i)] = g;
  }
}

AlgebraPtr build_algebra(Family family, int N) {
  std::shared_ptr<AlgebraSpec> spec(new AlgebraSpec());
  spec->family_ = family;
  spec->N_ = N;
  if (family == Family::sl) {
    if (N < 3 || N > 9) throw UnsupportedAlgebra("sl(N) requires 3 <= N <= 9");
    spec->build_sl();
  } else {
    if (N < 6 || N > 11) throw UnsupportedAlgebra("so(N) requires 6 <= N <= 11");
    spec->build_so();
  }
  spec->finish();
  return spec;
}

int tangent_dim(const AlgebraSpec& spec) {
  Matrix rows;
  for (int i = 0; i < spec.dim(); ++i) rows.push_back(spec.bracket(spec.basis(i), spec.x_psi()).coeffs());
  return rank(std::move(rows));
}

namespace {

std::vector<LocalizedPoly> as_poly_vector(const LieElement& x) {
  std::vector<LocalizedPoly> out;
  out.reserve(static_cast<std::size_t>(x.dim()));
  for (const auto& c : x.coeffs()) out.emplace_back(c);
  return out;
}

LocalizedPoly var(int slot) { return LocalizedPoly::variable(slot); }

LocalizedPoly sum_products(const std::vector<int>& left, const std::vector<int>& right, bool left_primed,
                           bool right_primed) {
  LocalizedPoly s;
  for (std::size_t i = 0; i < left.size(); ++i) {
    int l = left_primed ? slot_fp(left[i]) : slot_f(left[i]);
    int r = right_primed ? slot_fp(right[i]) : slot_f(right[i]);
    s += var(l) * var(r);
  }
  return s;
}

}  // namespace

LocalizedPoly compute_P(const AlgebraSpec& spec) {
  const int d = spec.dim();
  std::vector<LocalizedPoly> w(static_cast<std::size_t>(d));
  for (int slot = 2; slot < spec.chart_slots(); ++slot) {
    const LieElement& e = spec.coordinate(slot);
    for (int j = 0; j < d; ++j)
      if (sgn(e[j]) != 0) w[static_cast<std::size_t>(j)] += var(slot) * e[j];
  }
  std::vector<LocalizedPoly> t = as_poly_vector(spec.x_psi());
  for (int step = 0; step < 4; ++step) t = spec.bracket(w, t);
  // Project onto x0 and check nothing else survives.
  const LieElement& x0 = spec.x0();
  int k = 0;
  while (sgn(x0[k]) == 0) ++k;
  LocalizedPoly coef = t[static_cast<std::size_t>(k)] * (1 / x0[k]);
  for (int j = 0; j < d; ++j) {
    if (t[static_cast<std::size_t>(j)] != coef * x0[j])
      throw std::logic_error("compute_P: (ad w)^4 x_psi is not a multiple of x0");
  }
  return coef * make_rational(1, 24);
}

LocalizedPoly quadratic_a(const AlgebraSpec& spec) {
  const ChartLabels& L = spec.chart_labels();
  LocalizedPoly a = sum_products(L.x, L.xp, false, true) - sum_products(L.xt, L.xtp, false, true);
  if (L.xt0 > 0) a -= var(slot_f(L.xt0)) * var(slot_fp(L.xtp0));
  return a;
}

LocalizedPoly quadratic_b(const AlgebraSpec& spec) {
  if (spec.family() != Family::so) throw std::invalid_argument("b is defined for so only");
  const ChartLabels& L = spec.chart_labels();
  LocalizedPoly b = sum_products(L.x, L.xtp, false, true);
  if (L.xtp0 > 0) b -= var(slot_fp(L.xtp0)).pow(2) * make_rational(1, 2);
  return b;
}

LocalizedPoly quadratic_c(const AlgebraSpec& spec) {
  if (spec.family() != Family::so) throw std::invalid_argument("c is defined for so only");
  const ChartLabels& L = spec.chart_labels();
  LocalizedPoly c = sum_products(L.xp, L.xt, true, false);
  if (L.xt0 > 0) c += var(slot_f(L.xt0)).pow(2) * make_rational(1, 2);
  return c;
}

LocalizedPoly closed_form_P(const AlgebraSpec& spec) {
  LocalizedPoly a = quadratic_a(spec);
  LocalizedPoly p = a * a * make_rational(1, 4);
  if (spec.family() == Family::so) p += quadratic_b(spec) * quadratic_c(spec);
  return p;
}

}  // namespace orbitweyl
