// Multivariate polynomial gcd over Q. The heuristic evaluation/interpolation
// method (GCDHEU) handles almost all inputs met in practice; a recursive
// primitive remainder sequence is the fallback.

#include <algorithm>
#include <optional>

#include "hlv/arith/poly.hpp"

namespace hlv {

namespace {

std::optional<Var> first_variable(const Poly& a, const Poly& b) {
  for (Var v : kAllVars) {
    if (a.depends_on(v) || b.depends_on(v)) return v;
  }
  return std::nullopt;
}

Integer integer_content(const Poly& p) {
  Integer g = 0;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    if (g == 1) break;
  }
  return g;
}

bool mismatched(const Poly& a, const Poly& b) {
  for (Var v : kAllVars) {
    if (a.depends_on(v) != b.depends_on(v)) return true;
  }
  return false;
}

// Inverse of evaluation at v = xi using balanced base-xi digits.
Poly interpolate(Poly g, const Integer& xi, Var v) {
  std::vector<Poly::Term> out;
  const Integer half = xi / 2;
  for (unsigned i = 0; !g.is_zero(); ++i) {
    std::vector<Poly::Term> digit;
    for (const auto& t : g.terms()) {
      Integer d;
      mpz_fdiv_r(d.get_mpz_t(), t.coeff.get_num_mpz_t(), xi.get_mpz_t());
      if (d > half) d -= xi;
      if (d != 0) digit.push_back({t.mono, Rational(d)});
    }
    Poly dp = Poly::from_sorted_terms(std::move(digit));
    for (const auto& t : dp.terms()) out.push_back({t.mono.with_exponent(v, i), t.coeff});
    g -= dp;
    g /= Rational(xi);
  }
  return Poly::from_terms(std::move(out));
}

// gcd of two integer polynomials including the integer content; nullopt when
// the heuristic gives up.
std::optional<Poly> heuristic_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  const Integer ca = integer_content(a);
  const Integer cb = integer_content(b);
  Integer c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (a.is_constant() || b.is_constant()) return Poly(Rational(c));
  Poly ap = a;
  ap /= Rational(ca);
  Poly bp = b;
  bp /= Rational(cb);
  if (mismatched(ap, bp) || !ap.monomial_content().is_one() || !bp.monomial_content().is_one()) {
    return gcd(ap, bp) * Rational(c);
  }
  const Var v = *first_variable(ap, bp);
  const unsigned deg = std::max(ap.degree(v), bp.degree(v));
  Integer xi = 2 * std::min(ap.max_norm(), bp.max_norm()) + 2;
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * deg > 60000) return std::nullopt;
    const Poly ga = ap.evaluate(v, Rational(xi));
    const Poly gb = bp.evaluate(v, Rational(xi));
    if (auto g = heuristic_gcd(ga, gb)) {
      const Poly h = interpolate(*g, xi, v);
      if (!h.is_zero()) {
        const Poly cand = h.primitive_part();
        if (divide_exact(ap, cand) && divide_exact(bp, cand)) return cand * Rational(c);
      }
    }
    const Integer root = sqrt(sqrt(xi));
    xi = xi * 73794 * root / 27011;
  }
  return std::nullopt;
}

Poly pseudo_remainder(const Poly& a, const Poly& b, Var v) {
  const auto bc = b.coefficients_in(v);
  const unsigned db = static_cast<unsigned>(bc.size() - 1);
  const Poly& lb = bc.back();
  Poly r = a;
  while (!r.is_zero() && r.degree(v) >= db) {
    const unsigned dr = r.degree(v);
    const Poly lr = r.coefficients_in(v).back();
    r = r * lb - (lr * b).shifted(Monomial::of(v, dr - db));
  }
  return r;
}

Poly content_in(const Poly& p, Var v) {
  Poly g;
  for (const auto& c : p.coefficients_in(v)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Poly primitive_in(const Poly& p, Var v) {
  const Poly c = content_in(p, v);
  if (c.is_one()) return p.primitive_part();
  return divide_exact(p, c)->primitive_part();
}

Poly remainder_sequence_gcd(const Poly& a, const Poly& b) {
  const Var v = *first_variable(a, b);
  const Poly c = gcd(content_in(a, v), content_in(b, v));
  Poly x = primitive_in(a, v);
  Poly y = primitive_in(b, v);
  if (x.degree(v) < y.degree(v)) std::swap(x, y);
  while (!y.is_zero()) {
    Poly r = pseudo_remainder(x, y, v);
    x = std::move(y);
    y = r.is_zero() ? Poly{} : primitive_in(r, v);
    if (!y.is_zero() && !y.depends_on(v)) {
      x = Poly(1);
      break;
    }
  }
  return (primitive_in(x, v) * c).primitive_part();
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  Poly x = a.primitive_part();
  Poly y = b.primitive_part();
  if (x == y) return x;
  const Monomial mx = x.monomial_content();
  const Monomial my = y.monomial_content();
  const Monomial mono = mx.gcd(my);
  x = x.unshifted(mx);
  y = y.unshifted(my);
  const Poly mono_part = Poly::monomial(mono, Rational(1));
  if (x.is_constant() || y.is_constant()) return mono_part;

  for (Var v : kAllVars) {
    if (x.depends_on(v) == y.depends_on(v)) continue;
    const Poly& with = x.depends_on(v) ? x : y;
    Poly g = x.depends_on(v) ? y : x;
    for (const auto& c : with.coefficients_in(v)) {
      if (c.is_zero()) continue;
      g = gcd(g, c);
      if (g.is_constant()) break;
    }
    return g.primitive_part().shifted(mono);
  }

  const Poly& small = x.size() <= y.size() ? x : y;
  const Poly& large = x.size() <= y.size() ? y : x;
  if (divide_exact(large, small)) return small.shifted(mono);

  if (auto g = heuristic_gcd(x, y)) return g->primitive_part().shifted(mono);
  return remainder_sequence_gcd(x, y).shifted(mono);
}

}  // namespace hlv
