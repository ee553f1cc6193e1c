#include "orbitweyl/localized_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbitweyl {

namespace {

bool term_less(const LocalizedPoly::Term& a, const LocalizedPoly::Term& b) { return a.first < b.first; }

// Merge two sorted term lists; sign = +1 for addition, -1 for subtraction.
std::vector<LocalizedPoly::Term> merge_terms(const std::vector<LocalizedPoly::Term>& a,
                                             const std::vector<LocalizedPoly::Term>& b, int sign) {
  std::vector<LocalizedPoly::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin(), j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, sign > 0 ? j->second : Rational(-j->second));
      ++j;
    } else {
      Rational c = sign > 0 ? Rational(i->second + j->second) : Rational(i->second - j->second);
      if (sgn(c) != 0) out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LocalizedPoly::LocalizedPoly(const Rational& c) {
  if (sgn(c) != 0) {
    terms_.emplace_back(ChartMonomial{}, c);
    terms_[0].second.canonicalize();
  }
}

LocalizedPoly LocalizedPoly::variable(int slot, int power) {
  return monomial(ChartMonomial::unit(slot, power));
}

LocalizedPoly LocalizedPoly::monomial(const ChartMonomial& m, const Rational& c) {
  if (sgn(c) == 0) return {};
  for (int s = 1; s < kMaxSlots; ++s)
    if (m[s] < 0) throw std::invalid_argument("only f0 may carry a negative exponent");
  LocalizedPoly p;
  p.terms_.emplace_back(m, c);
  p.terms_[0].second.canonicalize();
  return p;
}

LocalizedPoly LocalizedPoly::from_terms(std::vector<Term> terms) {
  PolyAccumulator acc;
  for (auto& [m, c] : terms) {
    for (int s = 1; s < kMaxSlots; ++s)
      if (m[s] < 0) throw std::invalid_argument("only f0 may carry a negative exponent");
    c.canonicalize();
    acc.add(m, c);
  }
  return acc.take();
}

LocalizedPoly LocalizedPoly::from_sorted_terms(std::vector<Term> terms) {
  LocalizedPoly p;
  p.terms_ = std::move(terms);
  return p;
}

bool LocalizedPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_zero());
}

Rational LocalizedPoly::constant_term() const { return coefficient(ChartMonomial{}); }

Rational LocalizedPoly::coefficient(const ChartMonomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, Rational(0)}, term_less);
  if (it != terms_.end() && it->first == m) return it->second;
  return Rational(0);
}

LocalizedPoly LocalizedPoly::operator-() const {
  LocalizedPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

LocalizedPoly& LocalizedPoly::operator+=(const LocalizedPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, +1);
  return *this;
}

LocalizedPoly& LocalizedPoly::operator-=(const LocalizedPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, -1);
  return *this;
}

LocalizedPoly& LocalizedPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

LocalizedPoly operator*(const LocalizedPoly& a, const LocalizedPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return b.times_monomial(a.terms_[0].first, a.terms_[0].second);
  if (b.size() == 1) return a.times_monomial(b.terms_[0].first, b.terms_[0].second);
  PolyAccumulator acc;
  acc.add_product(a, b);
  return acc.take();
}

LocalizedPoly LocalizedPoly::times_monomial(const ChartMonomial& m, const Rational& c) const {
  if (sgn(c) == 0) return {};
  LocalizedPoly r;
  r.terms_.reserve(terms_.size());
  for (const auto& [mono, coef] : terms_) r.terms_.emplace_back(mono + m, coef * c);
  return r;
}

LocalizedPoly LocalizedPoly::pow(unsigned e) const {
  LocalizedPoly result(1);
  LocalizedPoly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

LocalizedPoly LocalizedPoly::partial(int slot) const {
  // d/dx maps distinct monomials to distinct monomials and keeps their order.
  LocalizedPoly r;
  r.terms_.reserve(terms_.size());
  const ChartMonomial step = ChartMonomial::unit(slot);
  for (const auto& [mono, coef] : terms_) {
    int e = mono[slot];
    if (e == 0) continue;
    r.terms_.emplace_back(mono - step, coef * e);
  }
  return r;
}

LocalizedPoly LocalizedPoly::partial(const DerivMultiIndex& d) const {
  LocalizedPoly r;
  r.terms_.reserve(terms_.size());
  ChartMonomial step;
  for (int s = 0; s < kMaxSlots; ++s) step.set(s, d[s]);
  for (const auto& [mono, coef] : terms_) {
    long factor = 1;
    for (int s = 0; s < kMaxSlots && factor != 0; ++s) {
      for (int j = 0; j < d[s]; ++j) factor *= mono[s] - j;
    }
    if (factor == 0) continue;
    r.terms_.emplace_back(mono - step, coef * factor);
  }
  return r;
}

Rational LocalizedPoly::eval(const std::vector<Rational>& point) const {
  if (point.empty() || sgn(point[0]) == 0)
    throw std::domain_error("evaluation point has f0 = 0 (outside the regular locus)");
  Rational sum(0);
  for (const auto& [mono, coef] : terms_) {
    Rational v = coef;
    for (int s = 0; s < kMaxSlots; ++s) {
      int e = mono[s];
      if (e == 0) continue;
      if (static_cast<std::size_t>(s) >= point.size())
        throw std::invalid_argument("evaluation point is missing a chart variable");
      v *= power(point[static_cast<std::size_t>(s)], e);
    }
    sum += v;
  }
  return sum;
}

std::map<int, LocalizedPoly> LocalizedPoly::grade_split(Grading kind) const {
  std::map<int, LocalizedPoly> out;
  for (const auto& t : terms_) {
    int g = kind == Grading::euler ? euler_degree(t.first) : h_weight(t.first);
    out[g].terms_.push_back(t);  // sub-sequences of a sorted list stay sorted
  }
  return out;
}

std::string format_term(const Rational& c, const std::string& body, bool first) {
  std::string out;
  Rational a = abs(c);
  if (first) {
    if (sgn(c) < 0) out += "-";
  } else {
    out += sgn(c) < 0 ? " - " : " + ";
  }
  if (body.empty()) return out + to_string(a);
  if (a != 1) {
    out += a.get_den() == 1 ? to_string(a) : "(" + to_string(a) + ")";
    out += "*";
  }
  return out + body;
}

std::string LocalizedPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, coef] : terms_) {
    out += format_term(coef, format_monomial(mono), first);
    first = false;
  }
  return out;
}

std::string to_string(const LocalizedPoly& p) { return p.to_string(); }

std::optional<Rational> scalar_multiple(const LocalizedPoly& a, const LocalizedPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("scalar_multiple: zero divisor");
  if (a.is_zero()) return Rational(0);
  if (a.size() != b.size()) return std::nullopt;
  Rational c = a.terms()[0].second / b.terms()[0].second;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.terms()[i].first != b.terms()[i].first) return std::nullopt;
    if (a.terms()[i].second != c * b.terms()[i].second) return std::nullopt;
  }
  return c;
}

void PolyAccumulator::add(const ChartMonomial& m, const Rational& c) {
  auto [it, inserted] = map_.try_emplace(m, c);
  if (!inserted) it->second += c;
}

void PolyAccumulator::add_product(const ChartMonomial& m, const Rational& a, const Rational& b) {
  auto [it, inserted] = map_.try_emplace(m);
  if (inserted) {
    mpq_mul(it->second.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
  } else {
    mpq_mul(scratch_.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
    it->second += scratch_;
  }
}

void PolyAccumulator::add_scaled(const LocalizedPoly& p, const Rational& c) {
  for (const auto& [m, a] : p.terms()) add_product(m, a, c);
}

void PolyAccumulator::add_scaled(const LocalizedPoly& p, const Rational& c, const ChartMonomial& shift) {
  for (const auto& [m, a] : p.terms()) add_product(m + shift, a, c);
}

void PolyAccumulator::add_product(const LocalizedPoly& a, const LocalizedPoly& b, const Rational& c) {
  if (c == 1) {
    for (const auto& [ma, ca] : a.terms())
      for (const auto& [mb, cb] : b.terms()) add_product(ma + mb, ca, cb);
    return;
  }
  Rational t;
  for (const auto& [ma, ca] : a.terms()) {
    t = ca * c;
    for (const auto& [mb, cb] : b.terms()) add_product(ma + mb, t, cb);
  }
}

LocalizedPoly PolyAccumulator::take() {
  std::vector<LocalizedPoly::Term> terms;
  terms.reserve(map_.size());
  for (auto& [m, c] : map_)
    if (sgn(c) != 0) terms.emplace_back(m, std::move(c));
  map_.clear();
  std::sort(terms.begin(), terms.end(), term_less);
  return LocalizedPoly::from_sorted_terms(std::move(terms));
}

}  // namespace orbitweyl
