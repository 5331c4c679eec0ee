#include "hlv/arith/rational_function.hpp"

#include "hlv/error.hpp"

namespace hlv {

namespace {

Poly exact(const Poly& a, const Poly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw MathError("internal inconsistency");
  return std::move(*q);
}

}  // namespace

RationalFunction RationalFunction::scaled(Poly num, Poly den) {
  Rational c = den.content();
  if (den.leading_coefficient() < 0) c = -c;
  if (c != 1) {
    num /= c;
    den /= c;
  }
  return {std::move(num), std::move(den), 0};
}

RationalFunction RationalFunction::normalize(Poly num, Poly den) {
  if (den.is_zero()) throw MathError("division by zero");
  if (num.is_zero()) return {};
  if (!den.is_constant()) {
    const Poly g = gcd(num, den);
    if (!g.is_one()) {
      num = exact(num, g);
      den = exact(den, g);
    }
  }
  return scaled(std::move(num), std::move(den));
}

RationalFunction RationalFunction::operator-() const { return {-num_, den_, 0}; }

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  const Poly g = gcd(den_, o.den_);
  if (g.is_one()) {
    Poly num = num_ * o.den_ + o.num_ * den_;
    Poly den = den_ * o.den_;
    return *this = scaled(std::move(num), std::move(den));
  }
  const Poly b1 = exact(den_, g);
  const Poly d1 = exact(o.den_, g);
  Poly num = num_ * d1 + o.num_ * b1;
  if (num.is_zero()) return *this = RationalFunction();
  Poly den = b1 * d1 * g;
  const Poly h = gcd(num, g);
  if (!h.is_one()) {
    num = exact(num, h);
    den = exact(den, h);
  }
  return *this = scaled(std::move(num), std::move(den));
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFunction();
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  Poly a = num_;
  Poly d = o.den_;
  Poly c = o.num_;
  Poly b = den_;
  if (!d.is_one()) {
    const Poly g1 = gcd(a, d);
    if (!g1.is_one()) {
      a = exact(a, g1);
      d = exact(d, g1);
    }
  }
  if (!b.is_one()) {
    const Poly g2 = gcd(c, b);
    if (!g2.is_one()) {
      c = exact(c, g2);
      b = exact(b, g2);
    }
  }
  return *this = scaled(a * c, b * d);
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw MathError("division by zero");
  return scaled(den_, num_);
}

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  return {num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), 0};
}

RationalFunction RationalFunction::adams(unsigned r) const {
  // x -> x^r preserves coprimality, content and the sign of the leading term.
  return {num_.adams(r), den_.adams(r), 0};
}

std::pair<Poly, Poly> substitute_poly(const Poly& p, const std::map<Var, RationalFunction>& assignment) {
  struct Slot {
    Var var;
    unsigned max_exp;
    std::vector<Poly> num_pow;
    std::vector<Poly> den_pow;
  };
  std::vector<Slot> slots;
  for (const auto& [v, value] : assignment) {
    if (!p.depends_on(v)) continue;
    Slot s{v, p.degree(v), {Poly(1)}, {Poly(1)}};
    for (unsigned e = 1; e <= s.max_exp; ++e) {
      s.num_pow.push_back(s.num_pow.back() * value.num());
      s.den_pow.push_back(s.den_pow.back() * value.den());
    }
    slots.push_back(std::move(s));
  }
  if (slots.empty()) return {p, Poly(1)};

  std::vector<Poly::Term> out;
  for (const auto& t : p.terms()) {
    Monomial rest = t.mono;
    Poly prod = Poly::monomial(Monomial{}, t.coeff);
    for (const auto& s : slots) {
      const unsigned e = t.mono.exponent(s.var);
      rest = rest.with_exponent(s.var, 0);
      prod = prod * s.num_pow[e];
      if (s.max_exp != e) prod = prod * s.den_pow[s.max_exp - e];
      if (prod.is_zero()) break;
    }
    for (const auto& pt : prod.terms()) out.push_back({pt.mono * rest, pt.coeff});
  }
  Poly den(1);
  for (const auto& s : slots) den = den * s.den_pow[s.max_exp];
  return {Poly::from_terms(std::move(out)), std::move(den)};
}

RationalFunction RationalFunction::substitute(const std::map<Var, RationalFunction>& assignment) const {
  auto [n1, d1] = substitute_poly(num_, assignment);
  auto [n2, d2] = substitute_poly(den_, assignment);
  if (n2.is_zero()) throw MathError("singular specialization");
  if (n1.is_zero()) return {};
  return normalize(n1 * d2, d1 * n2);
}

RationalFunction RationalFunction::substitute(Var v, const RationalFunction& value) const {
  return substitute(std::map<Var, RationalFunction>{{v, value}});
}

RationalFunction RationalFunction::evaluate(Var v, const Rational& x) const {
  Poly d = den_.evaluate(v, x);
  if (d.is_zero()) throw MathError("singular specialization");
  return normalize(num_.evaluate(v, x), std::move(d));
}

}  // namespace hlv
