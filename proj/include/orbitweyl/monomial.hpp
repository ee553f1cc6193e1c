#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

namespace orbitweyl {

// Chart variables are addressed by slot: 0 = f0, 1 = fp0, 2i = f_i, 2i+1 = fp_i.
// Sixteen slots cover m <= 7 (sl(N) with N <= 9, so(N) with N <= 11).
inline constexpr int kMaxSlots = 16;

inline constexpr int slot_f(int i) { return 2 * i; }
inline constexpr int slot_fp(int i) { return 2 * i + 1; }

// Packed exponent vector. The Tag keeps chart monomials and derivative
// multi-indices from being mixed up; the storage is identical.
template <class Tag>
class Exponents {
 public:
  Exponents() { exps_.fill(0); }

  static Exponents unit(int slot, int power = 1) {
    Exponents e;
    e.set(slot, power);
    return e;
  }

  int operator[](int slot) const { return exps_[static_cast<std::size_t>(slot)]; }

  void set(int slot, int value);  // throws std::overflow_error outside int8 range

  int total() const {
    int t = 0;
    for (auto v : exps_) t += v;
    return t;
  }

  bool is_zero() const {
    for (auto v : exps_)
      if (v != 0) return false;
    return true;
  }

  // Componentwise sum / difference, range checked.
  Exponents operator+(const Exponents& o) const;
  Exponents operator-(const Exponents& o) const;

  // True when every component of *this is <= the matching one of o.
  bool divides(const Exponents& o) const {
    for (int s = 0; s < kMaxSlots; ++s)
      if ((*this)[s] > o[s]) return false;
    return true;
  }

  std::size_t hash() const {
    std::uint64_t a, b;
    std::memcpy(&a, exps_.data(), 8);
    std::memcpy(&b, exps_.data() + 8, 8);
    a ^= b * 0x9E3779B97F4A7C15ull + 0x7F4A7C159E3779B9ull + (a << 6) + (a >> 2);
    a ^= a >> 31;
    a *= 0xBF58476D1CE4E5B9ull;
    a ^= a >> 29;
    return static_cast<std::size_t>(a);
  }

  friend bool operator==(const Exponents&, const Exponents&) = default;
  // Lexicographic on the slot order f0, fp0, f1, fp1, ...
  friend std::strong_ordering operator<=>(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.exps_.size(); ++i) {
      if (a.exps_[i] != b.exps_[i]) return a.exps_[i] <=> b.exps_[i];
    }
    return std::strong_ordering::equal;
  }

 private:
  std::array<std::int8_t, kMaxSlots> exps_;
};

struct ChartTag;
struct DerivTag;

// Monomial in the localized chart ring; only slot 0 (f0) may be negative.
using ChartMonomial = Exponents<ChartTag>;
// Multi-index of partial derivatives (or of fiber variables in a symbol).
using DerivMultiIndex = Exponents<DerivTag>;

template <class Tag>
struct ExponentsHash {
  std::size_t operator()(const Exponents<Tag>& e) const { return e.hash(); }
};

// Euler degree: every chart variable has degree 1.
inline int euler_degree(const ChartMonomial& m) { return m.total(); }

// Weight under eta^h: f0 -> -2, fp0 -> 0, f_i and fp_i -> -1.
inline int h_weight(const ChartMonomial& m) {
  int w = -2 * m[0];
  for (int s = 2; s < kMaxSlots; ++s) w -= m[s];
  return w;
}

// Variable names used by the text format.
std::string slot_name(int slot);          // f0, fp0, f1, fp1, ...
std::string fiber_name(int slot);         // xi0, xip0, xi1, xip1, ...
int parse_slot_name(const std::string&);  // inverse of slot_name, -1 if unknown

// "f0^-1*f1^2", "" for the unit monomial.
std::string format_monomial(const ChartMonomial& m);
// "D_f0*D_fp1^2", "" for the empty index.
std::string format_derivative(const DerivMultiIndex& d);
// "xi0*xip1^2", "" for the empty index.
std::string format_fiber(const DerivMultiIndex& d);

// Product over slots of binomial(a_s, b_s); requires b <= a componentwise.
long multi_binomial(const DerivMultiIndex& a, const DerivMultiIndex& b);

// All multi-indices g with g <= a componentwise, in lexicographic order.
std::vector<DerivMultiIndex> sub_indices(const DerivMultiIndex& a);

}  // namespace orbitweyl

template <class Tag>
struct std::hash<orbitweyl::Exponents<Tag>> {
  std::size_t operator()(const orbitweyl::Exponents<Tag>& e) const { return e.hash(); }
};
