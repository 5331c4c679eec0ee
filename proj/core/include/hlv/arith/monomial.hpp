#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

namespace hlv {

// Global variable order. Monomials compare lexicographically with z the most
// significant variable, so this order is also the canonical term order.
enum class Var : std::uint8_t { z = 0, w, q, t, s, T, u };

inline constexpr std::size_t kNumVars = 7;
inline constexpr std::array<Var, kNumVars> kAllVars = {Var::z, Var::w, Var::q, Var::t,
                                                       Var::s, Var::T, Var::u};

std::string_view var_name(Var v);
std::optional<Var> parse_var(std::string_view name);

// Exponent vector packed into 16-bit fields of a 128-bit word. Field values
// are kept below 2^15 so the top bit of every field can serve as a guard for
// overflow and divisibility tests.
class Monomial {
 public:
  using Bits = unsigned __int128;
  static constexpr unsigned kMaxExponent = (1u << 15) - 1;

  constexpr Monomial() = default;

  static Monomial of(Var v, unsigned e = 1);
  static Monomial from_exponents(const std::array<unsigned, kNumVars>& e);

  [[nodiscard]] unsigned exponent(Var v) const {
    return static_cast<unsigned>((bits_ >> shift(v)) & 0xFFFF);
  }
  [[nodiscard]] std::array<unsigned, kNumVars> exponents() const;
  [[nodiscard]] Monomial with_exponent(Var v, unsigned e) const;
  [[nodiscard]] unsigned total_degree() const;
  [[nodiscard]] bool is_one() const { return bits_ == 0; }
  [[nodiscard]] bool divides(const Monomial& other) const;
  [[nodiscard]] Monomial scaled(unsigned r) const;
  [[nodiscard]] Monomial gcd(const Monomial& other) const;
  [[nodiscard]] Bits bits() const { return bits_; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.bits_ <=> b.bits_; }

 private:
  static constexpr unsigned shift(Var v) {
    return 16u * static_cast<unsigned>(kNumVars - 1 - static_cast<std::size_t>(v));
  }
  static Bits guard_mask();

  Bits bits_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    const auto b = m.bits();
    auto lo = static_cast<std::uint64_t>(b);
    auto hi = static_cast<std::uint64_t>(b >> 64);
    std::uint64_t h = lo * 0x9E3779B97F4A7C15ULL ^ (hi + 0x632BE59BD9B4E019ULL + (lo << 6) + (lo >> 2));
    h ^= h >> 31;
    return static_cast<std::size_t>(h * 0xBF58476D1CE4E5B9ULL);
  }
};

}  // namespace hlv
