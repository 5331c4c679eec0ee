#include "hlv/arith/monomial.hpp"

#include <stdexcept>

namespace hlv {

namespace {
constexpr std::array<std::string_view, kNumVars> kNames = {"z", "w", "q", "t", "s", "T", "u"};
}

std::string_view var_name(Var v) { return kNames[static_cast<std::size_t>(v)]; }

std::optional<Var> parse_var(std::string_view name) {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (kNames[i] == name) return static_cast<Var>(i);
  }
  return std::nullopt;
}

Monomial::Bits Monomial::guard_mask() {
  Bits m = 0;
  for (std::size_t i = 0; i < kNumVars; ++i) m |= static_cast<Bits>(0x8000) << (16 * i);
  return m;
}

Monomial Monomial::of(Var v, unsigned e) {
  if (e > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
  Monomial m;
  m.bits_ = static_cast<Bits>(e) << shift(v);
  return m;
}

Monomial Monomial::from_exponents(const std::array<unsigned, kNumVars>& e) {
  Monomial m;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (e[i] > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
    m.bits_ |= static_cast<Bits>(e[i]) << shift(static_cast<Var>(i));
  }
  return m;
}

std::array<unsigned, kNumVars> Monomial::exponents() const {
  std::array<unsigned, kNumVars> e{};
  for (std::size_t i = 0; i < kNumVars; ++i) e[i] = exponent(static_cast<Var>(i));
  return e;
}

Monomial Monomial::with_exponent(Var v, unsigned e) const {
  if (e > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
  Monomial m = *this;
  m.bits_ &= ~(static_cast<Bits>(0xFFFF) << shift(v));
  m.bits_ |= static_cast<Bits>(e) << shift(v);
  return m;
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (std::size_t i = 0; i < kNumVars; ++i) d += exponent(static_cast<Var>(i));
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  // Subtract with every field's guard bit set; a cleared guard means a borrow.
  const Bits g = guard_mask();
  return (((other.bits_ | g) - bits_) & g) == g;
}

Monomial Monomial::scaled(unsigned r) const {
  auto e = exponents();
  for (auto& x : e) x *= r;
  return from_exponents(e);
}

Monomial Monomial::gcd(const Monomial& other) const {
  auto a = exponents();
  const auto b = other.exponents();
  for (std::size_t i = 0; i < kNumVars; ++i) a[i] = std::min(a[i], b[i]);
  return from_exponents(a);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.bits_ = a.bits_ + b.bits_;
  if (m.bits_ & Monomial::guard_mask()) throw std::overflow_error("monomial exponent overflow");
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.bits_ = a.bits_ - b.bits_;
  return m;
}

}  // namespace hlv
