#include "orbitweyl/monomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace orbitweyl {

template <class Tag>
void Exponents<Tag>::set(int slot, int value) {
  if (slot < 0 || slot >= kMaxSlots) throw std::out_of_range("chart slot out of range");
  if (value < std::numeric_limits<std::int8_t>::min() ||
      value > std::numeric_limits<std::int8_t>::max())
    throw std::overflow_error("exponent exceeds packed range");
  exps_[static_cast<std::size_t>(slot)] = static_cast<std::int8_t>(value);
}

template <class Tag>
Exponents<Tag> Exponents<Tag>::operator+(const Exponents& o) const {
  Exponents r;
  for (int s = 0; s < kMaxSlots; ++s) r.set(s, (*this)[s] + o[s]);
  return r;
}

template <class Tag>
Exponents<Tag> Exponents<Tag>::operator-(const Exponents& o) const {
  Exponents r;
  for (int s = 0; s < kMaxSlots; ++s) r.set(s, (*this)[s] - o[s]);
  return r;
}

template class Exponents<ChartTag>;
template class Exponents<DerivTag>;

namespace {

std::string indexed_name(const char* base, const char* primed, int slot) {
  return std::string(slot % 2 == 0 ? base : primed) + std::to_string(slot / 2);
}

template <class Tag>
std::string format_product(const Exponents<Tag>& e, const std::string& prefix,
                           std::string (*name)(int)) {
  std::string out;
  for (int s = 0; s < kMaxSlots; ++s) {
    int p = e[s];
    if (p == 0) continue;
    if (!out.empty()) out += '*';
    out += prefix + name(s);
    if (p != 1) out += '^' + std::to_string(p);
  }
  return out;
}

}  // namespace

std::string slot_name(int slot) { return indexed_name("f", "fp", slot); }
std::string fiber_name(int slot) { return indexed_name("xi", "xip", slot); }

int parse_slot_name(const std::string& name) {
  for (int s = 0; s < kMaxSlots; ++s)
    if (slot_name(s) == name) return s;
  return -1;
}

std::string format_monomial(const ChartMonomial& m) { return format_product(m, "", slot_name); }
std::string format_derivative(const DerivMultiIndex& d) { return format_product(d, "D_", slot_name); }
std::string format_fiber(const DerivMultiIndex& d) { return format_product(d, "", fiber_name); }

long multi_binomial(const DerivMultiIndex& a, const DerivMultiIndex& b) {
  long result = 1;
  for (int s = 0; s < kMaxSlots; ++s) {
    int n = a[s], k = b[s];
    if (k < 0 || k > n) throw std::invalid_argument("multi_binomial: index not dominated");
    long c = 1;
    for (int j = 1; j <= k; ++j) c = c * (n - k + j) / j;
    result *= c;
  }
  return result;
}

std::vector<DerivMultiIndex> sub_indices(const DerivMultiIndex& a) {
  std::vector<DerivMultiIndex> out{DerivMultiIndex{}};
  for (int s = 0; s < kMaxSlots; ++s) {
    if (a[s] == 0) continue;
    std::vector<DerivMultiIndex> next;
    next.reserve(out.size() * static_cast<std::size_t>(a[s] + 1));
    for (const auto& g : out) {
      for (int p = 0; p <= a[s]; ++p) {
        DerivMultiIndex h = g;
        h.set(s, p);
        next.push_back(h);
      }
    }
    out.swap(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace orbitweyl
