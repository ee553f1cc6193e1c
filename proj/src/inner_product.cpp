#include "orbitweyl/inner_product.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "orbitweyl/parallel.hpp"

namespace orbitweyl {

OrbitFunctionExpr OrbitFunctionExpr::constant(const Rational& c) { return monomial({}, c); }

OrbitFunctionExpr OrbitFunctionExpr::basis(int b, const Rational& c) { return monomial({b}, c); }

OrbitFunctionExpr OrbitFunctionExpr::monomial(Monomial m, const Rational& c) {
  OrbitFunctionExpr e;
  std::sort(m.begin(), m.end());
  Rational v = c;
  v.canonicalize();
  if (sgn(v) != 0) e.terms_.emplace(std::move(m), v);
  return e;
}

OrbitFunctionExpr OrbitFunctionExpr::linear(const LieElement& x) {
  OrbitFunctionExpr e;
  for (int i = 0; i < x.dim(); ++i)
    if (sgn(x[i]) != 0) e += basis(i, x[i]);
  return e;
}

int OrbitFunctionExpr::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    int k = static_cast<int>(m.size());
    if (d >= 0 && d != k) throw std::logic_error("OrbitFunctionExpr: mixed degrees");
    d = k;
  }
  return d;
}

OrbitFunctionExpr& OrbitFunctionExpr::operator+=(const OrbitFunctionExpr& o) {
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

OrbitFunctionExpr operator*(const OrbitFunctionExpr& a, const OrbitFunctionExpr& b) {
  OrbitFunctionExpr out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      OrbitFunctionExpr::Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out += OrbitFunctionExpr::monomial(std::move(m), ca * cb);
    }
  return out;
}

OrbitFunctionExpr operator*(OrbitFunctionExpr a, const Rational& c) {
  if (sgn(c) == 0) return {};
  for (auto& [m, v] : a.terms_) v *= c;
  return a;
}

std::string OrbitFunctionExpr::to_string(const AlgebraSpec& spec) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string body;
    for (int b : m) body += (body.empty() ? "" : "*") + ("f[" + spec.basis_name(b) + "]");
    out += format_term(c, body, first);
    first = false;
  }
  return out;
}

OrbitFunctionExpr conjugate_expr(const AlgebraSpec& spec, const OrbitFunctionExpr& f) {
  OrbitFunctionExpr out;
  for (const auto& [m, c] : f.terms()) {
    OrbitFunctionExpr::Monomial img;
    Rational coef = c;
    for (int b : m) {
      auto [target, sign] = spec.sigma_basis(b);
      img.push_back(target);
      coef *= -sign;
    }
    out += OrbitFunctionExpr::monomial(std::move(img), coef);
  }
  return out;
}

LocalizedPoly chart_expand(const Chart& chart, const OrbitFunctionExpr& f) {
  LocalizedPoly out;
  for (const auto& [m, c] : f.terms()) {
    LocalizedPoly t(c);
    for (int b : m) t = t * chart.basis_function(b);
    out += t;
  }
  return out;
}

DiffOp lift_to_operator(const ExoticFamily& family, const OrbitFunctionExpr& f) {
  DiffOp out;
  for (const auto& [m, c] : f.terms()) {
    DiffOp t = DiffOp::identity() * c;
    for (int b : m) t = t * family.by_basis.at(static_cast<std::size_t>(b));
    out += t;
  }
  return out;
}

LocalizedPoly apply_lift(const ExoticFamily& family, const OrbitFunctionExpr& f, const LocalizedPoly& g) {
  LocalizedPoly out;
  for (const auto& [m, c] : f.terms()) {
    LocalizedPoly t = g;
    for (auto it = m.rbegin(); it != m.rend() && !t.is_zero(); ++it)
      t = family.by_basis.at(static_cast<std::size_t>(*it)).apply(t);
    out += t * c;
  }
  return out;
}

Rational pairing(const Chart& chart, const ExoticFamily& family, const LocalizedPoly& f, const OrbitFunctionExpr& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  auto grades = f.grade_split(Grading::euler);
  if (grades.size() != 1) throw std::invalid_argument("pairing: f is not Euler homogeneous");
  if (grades.begin()->first != g.degree()) return 0;
  LocalizedPoly r = apply_lift(family, conjugate_expr(chart.spec(), g), f);
  if (!r.is_constant()) throw std::logic_error("pairing: degree-0 residue is not constant: " + r.to_string());
  return r.constant_term();
}

Rational pairing(const Chart& chart, const ExoticFamily& family, const OrbitFunctionExpr& f,
                 const OrbitFunctionExpr& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  if (f.degree() != g.degree()) return 0;
  return pairing(chart, family, chart_expand(chart, f), g);
}

std::vector<OrbitFunctionExpr::Monomial> degree_monomials(int dim, int p) {
  std::vector<OrbitFunctionExpr::Monomial> out;
  OrbitFunctionExpr::Monomial cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == p) {
      out.push_back(cur);
      return;
    }
    for (int b = start; b < dim; ++b) {
      cur.push_back(b);
      self(self, b);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

int evaluation_rank(const AlgebraSpec& spec, const std::vector<OrbitFunctionExpr::Monomial>& monomials,
                    std::uint64_t seed, Matrix* relations) {
  std::mt19937_64 rng(seed);
  const std::size_t npoints = monomials.size() + 4;
  // Points x monomials.
  Matrix eval;
  for (std::size_t k = 0; k < npoints; ++k) {
    auto vals = random_orbit_point(spec, rng);
    std::vector<Rational> row;
    for (const auto& m : monomials) {
      Rational v(1);
      for (int b : m) v *= vals[static_cast<std::size_t>(b)];
      row.push_back(v);
    }
    eval.push_back(std::move(row));
  }
  if (relations) *relations = nullspace(eval, monomials.size());
  return rank(std::move(eval));
}

namespace {

// Expresses a function of Euler degree q over the degree-q monomials.
class MonomialDecomposer {
 public:
  MonomialDecomposer(const Chart& chart, const std::vector<OrbitFunctionExpr::Monomial>& monomials) {
    for (std::size_t i = 0; i < monomials.size(); ++i) {
      LocalizedPoly p = chart_expand(chart, OrbitFunctionExpr::monomial(monomials[i]));
      if (span_.add(to_vec(p))) generator_to_monomial_.push_back(i);
    }
  }

  // Coefficients over all monomials (zero on dependent ones).
  std::vector<Rational> decompose(const LocalizedPoly& p, std::size_t nmonomials) const {
    auto c = span_.express(to_vec(p));
    if (!c) throw std::logic_error("function is outside the span of the degree monomials: " + p.to_string());
    std::vector<Rational> out(nmonomials);
    for (std::size_t j = 0; j < c->size(); ++j) out[generator_to_monomial_[j]] = (*c)[j];
    return out;
  }

 private:
  static std::map<ChartMonomial, Rational> to_vec(const LocalizedPoly& p) {
    std::map<ChartMonomial, Rational> v;
    for (const auto& [m, c] : p.terms()) v.emplace(m, c);
    return v;
  }
  SpanTracker<ChartMonomial> span_;
  std::vector<std::size_t> generator_to_monomial_;
};

}  // namespace

OrbitFunctionExpr express_in_monomials(const Chart& chart, const LocalizedPoly& f, int p) {
  auto monos = degree_monomials(chart.spec().dim(), p);
  MonomialDecomposer dec(chart, monos);
  auto c = dec.decompose(f, monos.size());
  OrbitFunctionExpr out;
  for (std::size_t i = 0; i < monos.size(); ++i)
    if (sgn(c[i]) != 0) out += OrbitFunctionExpr::monomial(monos[i], c[i]);
  return out;
}

GramResult gram_matrix(const Chart& chart, const ExoticFamily& family, int p, std::uint64_t seed) {
  if (p < 1) throw std::invalid_argument("gram_matrix: degree must be >= 1");
  const AlgebraSpec& g = chart.spec();
  const int dim = g.dim();
  // Build Gram matrices degree by degree.
  std::vector<OrbitFunctionExpr::Monomial> prev_monos = degree_monomials(dim, 0);
  Matrix prev{{Rational(1)}};
  GramResult res;
  for (int q = 1; q <= p; ++q) {
    auto monos = degree_monomials(dim, q);
    MonomialDecomposer dec(chart, prev_monos);
    std::map<OrbitFunctionExpr::Monomial, std::size_t> prev_index;
    for (std::size_t i = 0; i < prev_monos.size(); ++i) prev_index[prev_monos[i]] = i;
    auto rows = parallel_map(monos.size(), [&](std::size_t i) {
      LocalizedPoly f = chart_expand(chart, OrbitFunctionExpr::monomial(monos[i]));
      // lambda[c] = decomposition of D_c f over the degree q-1 monomials.
      std::vector<std::vector<Rational>> lambda(static_cast<std::size_t>(dim));
      std::vector<bool> done(static_cast<std::size_t>(dim), false);
      std::vector<Rational> row(monos.size());
      for (std::size_t j = 0; j < monos.size(); ++j) {
        const int b1 = monos[j].front();
        OrbitFunctionExpr::Monomial rest(monos[j].begin() + 1, monos[j].end());
        auto [c, s] = g.sigma_basis(b1);
        const auto cu = static_cast<std::size_t>(c);
        if (!done[cu]) {
          lambda[cu] = dec.decompose(family.by_basis[cu].apply(f), prev_monos.size());
          done[cu] = true;
        }
        const std::size_t r = prev_index.at(rest);
        Rational v(0);
        for (std::size_t k = 0; k < prev_monos.size(); ++k)
          if (sgn(lambda[cu][k]) != 0) v += lambda[cu][k] * prev[k][r];
        row[j] = v * (-s);
      }
      return row;
    });
    prev = std::move(rows);
    prev_monos = std::move(monos);
  }
  res.degree = p;
  res.monomials = prev_monos;
  res.matrix = prev;
  res.symmetric = true;
  for (std::size_t i = 0; i < res.matrix.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (res.matrix[i][j] != res.matrix[j][i]) res.symmetric = false;
  res.ldl = ldl_psd(res.matrix);
  Matrix relations;
  res.oracle_rank = evaluation_rank(g, res.monomials, seed, &relations);
  res.relations_in_kernel = true;
  for (const auto& rel : relations) {
    for (const auto& row : res.matrix) {
      Rational s(0);
      for (std::size_t k = 0; k < row.size(); ++k)
        if (sgn(rel[k]) != 0) s += row[k] * rel[k];
      if (sgn(s) != 0) res.relations_in_kernel = false;
    }
  }
  res.positive_on_quotient =
      res.symmetric && res.ldl.psd && res.relations_in_kernel && res.ldl.rank == res.oracle_rank;
  return res;
}

std::string GramResult::to_csv() const {
  std::ostringstream os;
  for (const auto& row : matrix) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << orbitweyl::to_string(row[j]);
    os << '\n';
  }
  return os.str();
}

}  // namespace orbitweyl
