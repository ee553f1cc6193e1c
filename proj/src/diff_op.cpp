#include "orbitweyl/diff_op.hpp"

#include <stdexcept>
#include <unordered_map>

namespace orbitweyl {

namespace {

// Lazily memoized partial derivatives d^gamma g of one polynomial.
class DerivativeCache {
 public:
  explicit DerivativeCache(const LocalizedPoly& g) : g_(g) {}

  const LocalizedPoly& get(const DerivMultiIndex& d) {
    if (d.is_zero()) return g_;
    auto it = cache_.find(d);
    if (it != cache_.end()) return it->second;
    int s = 0;
    while (d[s] == 0) ++s;
    DerivMultiIndex parent = d - DerivMultiIndex::unit(s);
    LocalizedPoly value = get(parent).partial(s);
    return cache_.emplace(d, std::move(value)).first->second;
  }

 private:
  const LocalizedPoly& g_;
  std::unordered_map<DerivMultiIndex, LocalizedPoly, ExponentsHash<DerivTag>> cache_;
};

template <class Map>
void merge_into(Map& dst, const Map& src, int sign) {
  for (const auto& [d, c] : src) {
    auto it = dst.find(d);
    if (it == dst.end()) {
      dst.emplace(d, sign > 0 ? c : -c);
      continue;
    }
    if (sign > 0) {
      it->second += c;
    } else {
      it->second -= c;
    }
    if (it->second.is_zero()) dst.erase(it);
  }
}

template <class Map>
std::string format_fiber_map(const Map& terms, std::string (*fmt)(const DerivMultiIndex&)) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [d, c] : terms) {
    std::string tail = fmt(d);
    for (const auto& [m, coef] : c.terms()) {
      std::string body = format_monomial(m);
      if (!tail.empty()) body = body.empty() ? tail : body + "*" + tail;
      out += format_term(coef, body, first);
      first = false;
    }
  }
  return out;
}

}  // namespace

DiffOp DiffOp::multiplication(const LocalizedPoly& c) { return term(DerivMultiIndex{}, c); }

DiffOp DiffOp::derivative(int slot, int power) {
  return term(DerivMultiIndex::unit(slot, power), LocalizedPoly(1));
}

DiffOp DiffOp::term(const DerivMultiIndex& d, const LocalizedPoly& c) {
  DiffOp op;
  if (!c.is_zero()) op.terms_.emplace(d, c);
  return op;
}

DiffOp DiffOp::from_map(Map terms) {
  DiffOp op;
  for (auto& [d, c] : terms)
    if (!c.is_zero()) op.terms_.emplace(d, std::move(c));
  return op;
}

int DiffOp::order() const {
  int ord = -1;
  for (const auto& [d, c] : terms_) ord = std::max(ord, d.total());
  return ord;
}

std::size_t DiffOp::term_count() const {
  std::size_t n = 0;
  for (const auto& [d, c] : terms_) n += c.size();
  return n;
}

LocalizedPoly DiffOp::coefficient(const DerivMultiIndex& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? LocalizedPoly() : it->second;
}

DiffOp DiffOp::operator-() const {
  DiffOp r = *this;
  for (auto& [d, c] : r.terms_) c = -c;
  return r;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  merge_into(terms_, o.terms_, +1);
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  merge_into(terms_, o.terms_, -1);
  return *this;
}

DiffOp& DiffOp::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else {
    for (auto& [d, p] : terms_) p *= c;
  }
  return *this;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) { return compose(a, b); }

DiffOp DiffOp::left_multiply(const LocalizedPoly& c) const {
  Map out;
  for (const auto& [d, p] : terms_) {
    LocalizedPoly q = c * p;
    if (!q.is_zero()) out.emplace(d, std::move(q));
  }
  DiffOp r;
  r.terms_ = std::move(out);
  return r;
}

LocalizedPoly DiffOp::apply(const LocalizedPoly& g) const {
  DerivativeCache cache(g);
  PolyAccumulator acc;
  for (const auto& [d, c] : terms_) {
    const LocalizedPoly& dg = cache.get(d);
    if (dg.is_zero()) continue;
    acc.add_product(c, dg);
  }
  return acc.take();
}

std::optional<int> DiffOp::euler_degree() const {
  std::optional<int> deg;
  for (const auto& [d, c] : terms_) {
    for (const auto& [m, coef] : c.terms()) {
      int e = orbitweyl::euler_degree(m) - d.total();
      if (deg && *deg != e) return std::nullopt;
      deg = e;
    }
  }
  return deg ? deg : std::optional<int>(0);
}

std::optional<int> DiffOp::h_weight() const {
  // d/df has the opposite weight of f.
  std::optional<int> wt;
  for (const auto& [d, c] : terms_) {
    ChartMonomial dm;
    for (int s = 0; s < kMaxSlots; ++s) dm.set(s, d[s]);
    int shift = orbitweyl::h_weight(dm);
    for (const auto& [m, coef] : c.terms()) {
      int w = orbitweyl::h_weight(m) - shift;
      if (wt && *wt != w) return std::nullopt;
      wt = w;
    }
  }
  return wt ? wt : std::optional<int>(0);
}

std::string DiffOp::to_string() const { return format_fiber_map(terms_, format_derivative); }

DiffOp compose(const DiffOp& a, const DiffOp& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // a_alpha d^alpha . b_beta d^beta = sum_gamma C(alpha,gamma) a_alpha (d^gamma b_beta) d^(alpha-gamma+beta)
  struct Left {
    const DerivMultiIndex* alpha;
    const LocalizedPoly* coef;
    std::vector<std::pair<DerivMultiIndex, Rational>> gammas;  // gamma, C(alpha,gamma)
  };
  std::vector<Left> left;
  left.reserve(a.terms().size());
  for (const auto& [alpha, c] : a.terms()) {
    Left l{&alpha, &c, {}};
    for (const auto& g : sub_indices(alpha)) l.gammas.emplace_back(g, Rational(multi_binomial(alpha, g)));
    left.push_back(std::move(l));
  }
  std::map<DerivMultiIndex, PolyAccumulator> acc;
  for (const auto& [beta, cb] : b.terms()) {
    DerivativeCache cache(cb);
    for (const auto& l : left) {
      for (const auto& [gamma, binom] : l.gammas) {
        const LocalizedPoly& dcb = cache.get(gamma);
        if (dcb.is_zero()) continue;
        acc[*l.alpha - gamma + beta].add_product(*l.coef, dcb, binom);
      }
    }
  }
  DiffOp::Map out;
  for (auto& [d, ac] : acc) {
    LocalizedPoly p = ac.take();
    if (!p.is_zero()) out.emplace(d, std::move(p));
  }
  return DiffOp::from_map(std::move(out));
}

DiffOp commutator(const DiffOp& a, const DiffOp& b) { return compose(a, b) - compose(b, a); }

bool grading_check(const DiffOp& d, const DiffOp& euler_field, const DiffOp& eta_h,
                   int expected_euler, int expected_h_weight) {
  return commutator(euler_field, d) == d * Rational(expected_euler) &&
         commutator(eta_h, d) == d * Rational(expected_h_weight);
}

SymbolPoly::SymbolPoly(const LocalizedPoly& c) {
  if (!c.is_zero()) terms_.emplace(DerivMultiIndex{}, c);
}

SymbolPoly SymbolPoly::fiber(int slot) {
  SymbolPoly s;
  s.terms_.emplace(DerivMultiIndex::unit(slot), LocalizedPoly(1));
  return s;
}

SymbolPoly SymbolPoly::from_map(Map terms) {
  SymbolPoly s;
  for (auto& [d, c] : terms)
    if (!c.is_zero()) s.terms_.emplace(d, std::move(c));
  return s;
}

int SymbolPoly::degree() const {
  int deg = -1;
  for (const auto& [d, c] : terms_) deg = std::max(deg, d.total());
  return deg;
}

bool SymbolPoly::is_homogeneous() const {
  for (const auto& [d, c] : terms_)
    if (d.total() != degree()) return false;
  return true;
}

SymbolPoly SymbolPoly::operator-() const {
  SymbolPoly r = *this;
  for (auto& [d, c] : r.terms_) c = -c;
  return r;
}

SymbolPoly& SymbolPoly::operator+=(const SymbolPoly& o) {
  merge_into(terms_, o.terms_, +1);
  return *this;
}

SymbolPoly& SymbolPoly::operator-=(const SymbolPoly& o) {
  merge_into(terms_, o.terms_, -1);
  return *this;
}

SymbolPoly& SymbolPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else {
    for (auto& [d, p] : terms_) p *= c;
  }
  return *this;
}

SymbolPoly operator*(const SymbolPoly& a, const SymbolPoly& b) {
  std::map<DerivMultiIndex, PolyAccumulator> acc;
  for (const auto& [da, ca] : a.terms_)
    for (const auto& [db, cb] : b.terms_) acc[da + db].add_product(ca, cb);
  SymbolPoly::Map out;
  for (auto& [d, ac] : acc) out.emplace(d, ac.take());
  return SymbolPoly::from_map(std::move(out));
}

SymbolPoly SymbolPoly::pow(unsigned e) const {
  SymbolPoly result(LocalizedPoly(1));
  for (unsigned i = 0; i < e; ++i) result = result * *this;
  return result;
}

std::string SymbolPoly::to_string() const { return format_fiber_map(terms_, format_fiber); }

SymbolPoly principal_symbol(const DiffOp& d) {
  if (d.is_zero()) throw std::invalid_argument("principal symbol of the zero operator");
  const int ord = d.order();
  SymbolPoly::Map out;
  for (const auto& [idx, c] : d.terms())
    if (idx.total() == ord) out.emplace(idx, c);
  return SymbolPoly::from_map(std::move(out));
}

}  // namespace orbitweyl
