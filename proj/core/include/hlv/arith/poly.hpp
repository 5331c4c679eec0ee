#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "hlv/arith/monomial.hpp"

namespace hlv {

using Rational = mpq_class;
using Integer = mpz_class;

// Sparse multivariate polynomial over Q in the global variables. Terms are
// kept sorted by decreasing monomial (lex, z > w > q > t > s > T > u) with no
// zero coefficients, so structural equality is mathematical equality.
class Poly {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Poly() = default;
  explicit Poly(const Rational& c);
  explicit Poly(long c) : Poly(Rational(c)) {}

  static Poly variable(Var v, unsigned e = 1);
  static Poly monomial(const Monomial& m, const Rational& c);
  // Accepts terms in any order; merges duplicates and drops zeros.
  static Poly from_terms(std::vector<Term> terms);
  // Terms must already be strictly decreasing with nonzero coefficients.
  static Poly from_sorted_terms(std::vector<Term> terms);

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  [[nodiscard]] bool is_one() const;
  [[nodiscard]] Rational constant_term() const;
  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] const Term& leading_term() const { return terms_.front(); }
  [[nodiscard]] const Rational& leading_coefficient() const { return terms_.front().coeff; }
  [[nodiscard]] Rational coefficient(const Monomial& m) const;

  [[nodiscard]] unsigned degree(Var v) const;
  [[nodiscard]] unsigned min_degree(Var v) const;
  [[nodiscard]] unsigned total_degree() const;
  [[nodiscard]] bool depends_on(Var v) const;
  [[nodiscard]] std::array<unsigned, kNumVars> degrees() const;
  [[nodiscard]] Monomial monomial_content() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);
  Poly& operator/=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly&, const Poly&) = default;

  [[nodiscard]] Poly pow(unsigned e) const;
  // Multiplies by / divides out a monomial (the latter must divide every term).
  [[nodiscard]] Poly shifted(const Monomial& m) const;
  [[nodiscard]] Poly unshifted(const Monomial& m) const;
  // Adams operation on parameters: every variable x goes to x^r.
  [[nodiscard]] Poly adams(unsigned r) const;
  // Replaces v^e by v^(factor*e) for a single variable.
  [[nodiscard]] Poly stretch(Var v, unsigned factor) const;
  // Moves every exponent of `from` to `to` (to must be absent).
  [[nodiscard]] Poly rename(Var from, Var to) const;

  // Dense coefficient list in v: result[i] is the coefficient of v^i.
  [[nodiscard]] std::vector<Poly> coefficients_in(Var v) const;
  static Poly from_coefficients(Var v, const std::vector<Poly>& coeffs);

  [[nodiscard]] Poly substitute(Var v, const Poly& value) const;
  [[nodiscard]] Poly evaluate(Var v, const Rational& x) const;
  [[nodiscard]] Poly truncated(Var v, unsigned max_degree) const;

  // Least common multiple of coefficient denominators.
  [[nodiscard]] Integer denominator_lcm() const;
  // Positive rational c with this/c an integer polynomial of content 1.
  [[nodiscard]] Rational content() const;
  // this/content(), sign chosen so the leading coefficient is positive.
  [[nodiscard]] Poly primitive_part() const;
  // Maximum absolute value of the coefficients (integer polynomials).
  [[nodiscard]] Integer max_norm() const;

 private:
  std::vector<Term> terms_;
};

// Quotient a/b when b divides a exactly, otherwise nullopt. Throws MathError
// "division by zero" for b == 0.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

// Greatest common divisor, normalised to an integer polynomial with content
// 1 and positive leading coefficient. gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

}  // namespace hlv
