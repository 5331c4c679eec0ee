#pragma once

#include <vector>

#include "hlv/arith/rational_function.hpp"

namespace hlv {

// Power series in one variable, truncated after var^order.
class TruncatedSeries {
 public:
  TruncatedSeries(Var var, unsigned order);
  TruncatedSeries(Var var, std::vector<RationalFunction> coeffs);

  static TruncatedSeries constant(Var var, unsigned order, const RationalFunction& c);

  [[nodiscard]] Var variable() const { return var_; }
  [[nodiscard]] unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  [[nodiscard]] const std::vector<RationalFunction>& coefficients() const { return coeffs_; }
  [[nodiscard]] const RationalFunction& operator[](unsigned i) const { return coeffs_.at(i); }
  RationalFunction& operator[](unsigned i) { return coeffs_.at(i); }

  [[nodiscard]] TruncatedSeries truncated(unsigned order) const;

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  TruncatedSeries& operator*=(const RationalFunction& c);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(TruncatedSeries a, const RationalFunction& c) { return a *= c; }
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  // Multiplicative inverse; the constant coefficient must be nonzero.
  [[nodiscard]] TruncatedSeries inverse() const;
  // exp of a series with zero constant term.
  [[nodiscard]] TruncatedSeries exp() const;
  // Substitutes var -> c * var^k (k >= 1), staying within the same order.
  [[nodiscard]] TruncatedSeries rescaled(const RationalFunction& c, unsigned k) const;

 private:
  void check_compatible(const TruncatedSeries& o) const;

  Var var_;
  std::vector<RationalFunction> coeffs_;
};

// Power-series expansion of f in v through v^order. Throws MathError
// "not expandable" when the denominator vanishes at v = 0.
TruncatedSeries rf_series_expand(const RationalFunction& f, Var v, unsigned order);

}  // namespace hlv
