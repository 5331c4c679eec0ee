#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "hlv/arith/monomial.hpp"

namespace hlv::detail {

// Mixed-radix encoding of the exponent box [0, bound]. The flat index is
// monotone in the lex monomial order, and additive under multiplication as
// long as the product stays inside the box.
struct DenseLayout {
  std::array<unsigned, kNumVars> bound{};
  std::array<std::size_t, kNumVars> stride{};
  std::size_t size = 1;

  static std::optional<DenseLayout> make(const std::array<unsigned, kNumVars>& bound,
                                         std::size_t limit) {
    DenseLayout l;
    l.bound = bound;
    for (std::size_t i = kNumVars; i-- > 0;) {
      l.stride[i] = l.size;
      const std::size_t radix = static_cast<std::size_t>(bound[i]) + 1;
      if (l.size > limit / radix) return std::nullopt;
      l.size *= radix;
    }
    return l;
  }

  [[nodiscard]] std::size_t index(const Monomial& m) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (bound[i] != 0) idx += stride[i] * m.exponent(static_cast<Var>(i));
    }
    return idx;
  }

  [[nodiscard]] Monomial decode(std::size_t idx) const {
    std::array<unsigned, kNumVars> e{};
    for (std::size_t i = 0; i < kNumVars; ++i) {
      if (bound[i] == 0) continue;
      e[i] = static_cast<unsigned>(idx / stride[i]);
      idx %= stride[i];
    }
    return Monomial::from_exponents(e);
  }
};

}  // namespace hlv::detail
