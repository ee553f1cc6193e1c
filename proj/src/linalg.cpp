#include "orbitweyl/linalg.hpp"

#include <stdexcept>

#include "orbitweyl/monomial.hpp"

namespace orbitweyl {

namespace {

// Row-reduces `rows` in place (augmented columns included) and returns the
// pivot column of each leading row, restricted to the first `ncols` columns.
std::vector<std::size_t> row_reduce(Matrix& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Rational inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t j = c; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(Matrix rows) {
  if (rows.empty()) return 0;
  return static_cast<int>(row_reduce(rows, rows[0].size()).size());
}

std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
  std::size_t ncols = a.empty() ? 0 : a[0].size();
  Matrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  auto pivots = row_reduce(aug, ncols);
  for (std::size_t i = pivots.size(); i < aug.size(); ++i)
    if (sgn(aug[i][ncols]) != 0) return std::nullopt;
  std::vector<Rational> x(ncols);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][ncols];
  return x;
}

Matrix nullspace(const Matrix& a, std::size_t ncols) {
  Matrix r = a;
  auto pivots = row_reduce(r, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(ncols);
    x[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -r[i][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

template <class Key>
typename SpanTracker<Key>::Vec SpanTracker<Key>::reduce(Vec v, std::vector<Rational>& comb) const {
  comb.assign(rows_.size(), Rational(0));
  for (const auto& row : rows_) {
    auto it = v.find(row.pivot);
    if (it == v.end()) continue;
    Rational f = it->second;
    for (const auto& [k, c] : row.vec) {
      auto [jt, inserted] = v.try_emplace(k, 0);
      jt->second -= f * c;
      if (sgn(jt->second) == 0) v.erase(jt);
    }
    for (std::size_t j = 0; j < row.comb.size(); ++j) comb[j] += f * row.comb[j];
  }
  return v;
}

template <class Key>
std::optional<int> SpanTracker<Key>::add(const Vec& v, std::vector<Rational>* coeffs) {
  std::vector<Rational> comb;
  Vec residual = reduce(v, comb);
  if (residual.empty()) {
    if (coeffs) *coeffs = std::move(comb);
    return std::nullopt;
  }
  // residual = v - sum comb_j g_j, normalized on its first key.
  const int index = size();
  Row row;
  row.pivot = residual.begin()->first;
  Rational inv = 1 / residual.begin()->second;
  for (auto& [k, c] : residual) c *= inv;
  // Keep the rows fully reduced against each other on their pivots.
  row.comb.assign(static_cast<std::size_t>(index) + 1, Rational(0));
  for (std::size_t j = 0; j < comb.size(); ++j) row.comb[j] = -comb[j] * inv;
  row.comb[static_cast<std::size_t>(index)] = inv;
  row.vec = std::move(residual);
  for (auto& r : rows_) r.comb.resize(static_cast<std::size_t>(index) + 1);
  rows_.push_back(std::move(row));
  return index;
}

template <class Key>
std::optional<std::vector<Rational>> SpanTracker<Key>::express(const Vec& v) const {
  // Later rows may still contain earlier pivots, so reduce repeatedly until
  // no pivot key survives.
  std::vector<Rational> total(rows_.size());
  Vec cur = v;
  for (int pass = 0; pass <= size(); ++pass) {
    std::vector<Rational> comb;
    Vec next = reduce(cur, comb);
    for (std::size_t j = 0; j < comb.size(); ++j) total[j] += comb[j];
    cur = std::move(next);
    bool clean = true;
    for (const auto& row : rows_)
      if (cur.count(row.pivot)) clean = false;
    if (clean) break;
  }
  if (!cur.empty()) return std::nullopt;
  return total;
}

template class SpanTracker<int>;
template class SpanTracker<ChartMonomial>;

Rational quadratic_form(const Matrix& m, const std::vector<Rational>& x) {
  Rational s(0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < m.size(); ++j) s += x[i] * m[i][j] * x[j];
  }
  return s;
}

LdlResult ldl_psd(const Matrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("ldl_psd: matrix is not square");
  // Invariant: w = t * m * t^T, with t unit lower triangular up to the
  // processed pivots; eliminated rows/columns of w are zero off the diagonal.
  Matrix w = m;
  Matrix t(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) t[i][i] = 1;
  LdlResult result;
  auto witness_from = [&](const std::vector<Rational>& y) {
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) x[j] += y[i] * t[i][j];
    return x;
  };
  for (std::size_t k = 0; k < n; ++k) {
    const Rational d = w[k][k];
    result.pivots.push_back(d);
    if (sgn(d) < 0) {
      std::vector<Rational> y(n);
      y[k] = 1;
      result.witness = witness_from(y);
      return result;
    }
    if (sgn(d) == 0) {
      for (std::size_t j = k + 1; j < n; ++j) {
        if (sgn(w[k][j]) == 0) continue;
        // (s e_k + e_j)^T w (s e_k + e_j) = 2 s w_kj + w_jj = -1
        std::vector<Rational> y(n);
        y[k] = -(w[j][j] + 1) / (2 * w[k][j]);
        y[j] = 1;
        result.witness = witness_from(y);
        return result;
      }
      continue;
    }
    ++result.rank;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(w[i][k]) == 0) continue;
      Rational l = w[i][k] / d;
      for (std::size_t j = k; j < n; ++j) w[i][j] -= l * w[k][j];
      for (std::size_t j = 0; j < n; ++j) t[i][j] -= l * t[k][j];
    }
    for (std::size_t j = k + 1; j < n; ++j) w[k][j] = 0;
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < i; ++j) w[j][i] = w[i][j];
  }
  result.psd = true;
  return result;
}

}  // namespace orbitweyl
