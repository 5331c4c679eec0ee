#pragma once

#include <map>
#include <optional>

#include "hlv/arith/poly.hpp"

namespace hlv {

// Reduced quotient num/den of polynomials. The denominator is an integer
// polynomial with content 1 and positive leading coefficient, which makes the
// representation unique.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(Poly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(long c) : num_(c), den_(1) {}             // NOLINT(google-explicit-constructor)

  // Reduces and normalises; throws MathError "division by zero" for den == 0.
  static RationalFunction normalize(Poly num, Poly den);
  static RationalFunction variable(Var v, unsigned e = 1) { return Poly::variable(v, e); }

  [[nodiscard]] const Poly& num() const { return num_; }
  [[nodiscard]] const Poly& den() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] bool is_one() const { return num_.is_one() && den_.is_one(); }
  [[nodiscard]] bool is_polynomial() const { return den_.is_one(); }
  [[nodiscard]] bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  [[nodiscard]] bool depends_on(Var v) const { return num_.depends_on(v) || den_.depends_on(v); }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  [[nodiscard]] RationalFunction inverse() const;
  [[nodiscard]] RationalFunction pow(int e) const;
  [[nodiscard]] RationalFunction adams(unsigned r) const;

  // Simultaneous substitution of variables by rational functions. Throws
  // MathError "singular specialization" if the denominator vanishes.
  [[nodiscard]] RationalFunction substitute(const std::map<Var, RationalFunction>& assignment) const;
  [[nodiscard]] RationalFunction substitute(Var v, const RationalFunction& value) const;
  [[nodiscard]] RationalFunction evaluate(Var v, const Rational& x) const;

 private:
  RationalFunction(Poly num, Poly den, int /*trusted*/) : num_(std::move(num)), den_(std::move(den)) {}
  // Fixes the scaling of an already coprime pair.
  static RationalFunction scaled(Poly num, Poly den);

  Poly num_;
  Poly den_;
};

inline RationalFunction adams(const RationalFunction& f, unsigned r) { return f.adams(r); }
inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }

// Value of p under a simultaneous substitution, as numerator and denominator
// (not reduced).
std::pair<Poly, Poly> substitute_poly(const Poly& p, const std::map<Var, RationalFunction>& assignment);

}  // namespace hlv
