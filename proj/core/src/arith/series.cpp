#include "hlv/arith/series.hpp"

#include <algorithm>

#include "hlv/error.hpp"

namespace hlv {

TruncatedSeries::TruncatedSeries(Var var, unsigned order) : var_(var), coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(Var var, std::vector<RationalFunction> coeffs)
    : var_(var), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.resize(1);
}

TruncatedSeries TruncatedSeries::constant(Var var, unsigned order, const RationalFunction& c) {
  TruncatedSeries s(var, order);
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::truncated(unsigned order) const {
  std::vector<RationalFunction> c(coeffs_.begin(), coeffs_.begin() + std::min<std::size_t>(order + 1, coeffs_.size()));
  return {var_, std::move(c)};
}

void TruncatedSeries::check_compatible(const TruncatedSeries& o) const {
  if (var_ != o.var_) throw std::invalid_argument("series in different variables");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  check_compatible(o);
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  check_compatible(o);
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const RationalFunction& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check_compatible(b);
  const std::size_t n = std::min(a.coeffs_.size(), b.coeffs_.size());
  TruncatedSeries r(a.var_, static_cast<unsigned>(n - 1));
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return r;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (coeffs_[0].is_zero()) throw MathError("not expandable");
  const RationalFunction inv0 = coeffs_[0].inverse();
  TruncatedSeries r(var_, order());
  r.coeffs_[0] = inv0;
  for (std::size_t n = 1; n < coeffs_.size(); ++n) {
    RationalFunction acc;
    for (std::size_t i = 1; i <= n; ++i) {
      if (!coeffs_[i].is_zero()) acc += coeffs_[i] * r.coeffs_[n - i];
    }
    r.coeffs_[n] = -acc * inv0;
  }
  return r;
}

TruncatedSeries TruncatedSeries::exp() const {
  if (!coeffs_[0].is_zero()) throw MathError("exp of a series with nonzero constant term");
  TruncatedSeries r(var_, order());
  r.coeffs_[0] = RationalFunction(1);
  for (std::size_t n = 1; n < coeffs_.size(); ++n) {
    RationalFunction acc;
    for (std::size_t k = 1; k <= n; ++k) {
      if (coeffs_[k].is_zero()) continue;
      acc += coeffs_[k] * r.coeffs_[n - k] * RationalFunction(static_cast<long>(k));
    }
    r.coeffs_[n] = acc * RationalFunction(Rational(1, static_cast<long>(n)));
  }
  return r;
}

TruncatedSeries TruncatedSeries::rescaled(const RationalFunction& c, unsigned k) const {
  TruncatedSeries r(var_, order());
  RationalFunction cp(1);
  for (std::size_t i = 0; i * k < coeffs_.size(); ++i) {
    r.coeffs_[i * k] = coeffs_[i] * cp;
    cp *= c;
  }
  return r;
}

TruncatedSeries rf_series_expand(const RationalFunction& f, Var v, unsigned order) {
  const auto a = f.num().coefficients_in(v);
  const auto b = f.den().coefficients_in(v);
  if (b[0].is_zero()) throw MathError("not expandable");
  const RationalFunction inv_b0 = RationalFunction(b[0]).inverse();
  std::vector<RationalFunction> c(order + 1);
  for (unsigned n = 0; n <= order; ++n) {
    RationalFunction acc = n < a.size() ? RationalFunction(a[n]) : RationalFunction();
    for (unsigned i = 1; i <= n && i < b.size(); ++i) {
      if (b[i].is_zero() || c[n - i].is_zero()) continue;
      acc -= RationalFunction(b[i]) * c[n - i];
    }
    c[n] = acc * inv_b0;
  }
  return {v, std::move(c)};
}

}  // namespace hlv
