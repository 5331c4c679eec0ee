#include "hlv/hilbert/hilbert.hpp"

#include <map>
#include <stdexcept>

#include "hlv/kernel/kernel.hpp"
#include "hlv/macdonald/macdonald.hpp"

namespace hlv {

namespace {

Poly mono(Var v, unsigned e) { return Poly::variable(v, e); }

// 1 + c T^n through T^order.
TruncatedSeries one_plus(const RationalFunction& c, int n, int order) {
  TruncatedSeries s = TruncatedSeries::constant(Var::T, static_cast<unsigned>(order), RationalFunction(1));
  if (n <= order) s[static_cast<unsigned>(n)] = c;
  return s;
}

// 1 / (1 - c T^n) through T^order.
TruncatedSeries geometric(const RationalFunction& c, int n, int order) {
  TruncatedSeries s(Var::T, static_cast<unsigned>(order));
  RationalFunction power(1);
  for (int j = 0; j * n <= order; ++j) {
    s[static_cast<unsigned>(j * n)] = power;
    power *= c;
  }
  return s;
}

std::vector<DegreeVerdict> compare(const TruncatedSeries& lhs, const TruncatedSeries& rhs, bool& all) {
  std::vector<DegreeVerdict> out;
  all = true;
  for (unsigned n = 0; n <= lhs.order(); ++n) {
    DegreeVerdict v{static_cast<int>(n), lhs[n] == rhs[n], lhs[n], rhs[n]};
    all = all && v.equal;
    out.push_back(std::move(v));
  }
  return out;
}

// Both sides of the Hilbert identity through T^order after substituting `at`.
std::pair<TruncatedSeries, TruncatedSeries> hilbert_sides(int order, const std::map<Var, RationalFunction>& at) {
  auto sub = [&](const RationalFunction& f) { return at.empty() ? f : f.substitute(at); };
  const RationalFunction z = sub(RationalFunction::variable(Var::z));
  const RationalFunction w = sub(RationalFunction::variable(Var::w));
  TruncatedSeries a(Var::T, static_cast<unsigned>(order));
  TruncatedSeries b = TruncatedSeries::constant(Var::T, static_cast<unsigned>(order), RationalFunction(1));
  for (int n = 1; n <= order; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      const RationalFunction h = sub(hook_term(lambda, 1));
      b[static_cast<unsigned>(n)] += h;
      a[static_cast<unsigned>(n)] += h * sub(RationalFunction(phi_lambda(lambda).poly.adams(2)));
    }
  }
  const RationalFunction prefactor = (z * z - RationalFunction(1)) * (RationalFunction(1) - w * w);
  TruncatedSeries lhs = a * b.inverse() * prefactor;
  lhs[0] += RationalFunction(1);

  TruncatedSeries rhs = TruncatedSeries::constant(Var::T, static_cast<unsigned>(order), RationalFunction(1));
  for (int n = 1; n <= order; ++n) {
    const TruncatedSeries f = one_plus(-(z * w), n, order);
    rhs = rhs * f * f * geometric(z * z, n, order) * geometric(w * w, n, order);
  }
  return {lhs, rhs};
}

Poly truncate_uT(const Poly& p, int u_order, int t_order) {
  return p.truncated(Var::u, static_cast<unsigned>(u_order)).truncated(Var::T, static_cast<unsigned>(t_order));
}

Rational factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return Rational(f);
}

// e^{x u} through u^order.
Poly exp_u(const Rational& x, int order) {
  Poly out;
  Rational power = 1;
  for (int m = 0; m <= order; ++m) {
    out += Poly(power / factorial(m)) * mono(Var::u, static_cast<unsigned>(m));
    power *= x;
  }
  return out;
}

}  // namespace

BoxGenerating phi_lambda(const Partition& lambda) {
  Poly p;
  for (const auto& cell : lambda.cells()) {
    p += mono(Var::z, static_cast<unsigned>(cell.col - 1)) * mono(Var::w, static_cast<unsigned>(cell.row - 1));
  }
  return {lambda, p};
}

TruncatedSeries goettsche_series(int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  auto qt = [](int a, int b) { return RationalFunction(mono(Var::q, static_cast<unsigned>(a)) * mono(Var::t, static_cast<unsigned>(b))); };
  TruncatedSeries out = TruncatedSeries::constant(Var::T, static_cast<unsigned>(n_max), RationalFunction(1));
  for (int n = 1; n <= n_max; ++n) {
    const TruncatedSeries num = one_plus(qt(n, 2 * n + 1), n, n_max);
    out = out * num * num * geometric(qt(n - 1, 2 * n), n, n_max) * geometric(qt(n + 1, 2 * n + 2), n, n_max);
  }
  return out;
}

HilbertReport hilbert_identity_check(int specialized_max, int full_max) {
  HilbertReport r;
  const RationalFunction s = RationalFunction::variable(Var::s);
  const auto [sl, sr] = hilbert_sides(specialized_max, {{Var::z, s.inverse()}, {Var::w, s}});
  r.specialized = compare(sl, sr, r.specialized_holds);
  const auto [fl, fr] = hilbert_sides(full_max, {});
  r.full = compare(fl, fr, r.full_holds);
  return r;
}

Rational bernoulli(int n) {
  if (n < 0) throw std::invalid_argument("Bernoulli index must be non-negative");
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    if (m == 0) {
      b[0] = 1;
      continue;
    }
    // Σ_{k=0}^{m} C(m+1, k) B_k = 0.
    Rational acc = 0;
    Integer binom = 1;
    for (int k = 0; k < m; ++k) {
      acc += Rational(binom) * b[static_cast<std::size_t>(k)];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    b[static_cast<std::size_t>(m)] = -acc / (m + 1);
  }
  return b[static_cast<std::size_t>(n)];
}

TruncatedSeries eisenstein_G(int k, int n_max) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("Eisenstein series needs even k >= 2");
  if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
  TruncatedSeries g(Var::T, static_cast<unsigned>(n_max));
  g[0] = RationalFunction(-bernoulli(k) / (2 * k));
  for (int n = 1; n <= n_max; ++n) {
    Integer sigma = 0;
    for (int d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      Integer p;
      mpz_pow_ui(p.get_mpz_t(), Integer(d).get_mpz_t(), static_cast<unsigned long>(k - 1));
      sigma += p;
    }
    g[static_cast<unsigned>(n)] = RationalFunction(Rational(sigma));
  }
  return g;
}

QuasimodularReport quasimodular_check(int n_max, int u_order) {
  if (n_max < 0 || u_order < 0) throw std::invalid_argument("orders must be non-negative");
  QuasimodularReport r;
  r.n_max = n_max;
  r.u_order = u_order;

  Poly lhs(1);
  for (int n = 1; n <= n_max; ++n) {
    const MultiPartition mu({n == 1 ? Partition{1} : Partition{n - 1, 1}});
    const HLVResult h = hlv_polynomial(mu, 1);
    if (!h.is_polynomial) throw std::runtime_error("kernel is not a polynomial for " + mu.to_string());
    Poly coeff;
    for (const auto& term : h.hlv.num().terms()) {
      const int a = static_cast<int>(term.mono.exponent(Var::z));
      const int b = static_cast<int>(term.mono.exponent(Var::w));
      coeff += Poly(term.coeff) * exp_u(Rational(a - b, 2), u_order);
    }
    lhs += coeff * mono(Var::T, static_cast<unsigned>(n));
  }

  // (1/u)(e^{u/2} - e^{-u/2}) = Σ_{m odd} 2 (1/2)^m u^{m-1} / m!.
  Poly sinh_part;
  for (int m = 1; m <= u_order + 1; m += 2) {
    Rational c = 2;
    for (int i = 0; i < m; ++i) c /= 2;
    sinh_part += Poly(c / factorial(m)) * mono(Var::u, static_cast<unsigned>(m - 1));
  }
  Poly x;
  for (int k = 2; k <= u_order; k += 2) {
    const TruncatedSeries g = eisenstein_G(k, n_max);
    Poly gk;
    for (unsigned n = 0; n <= g.order(); ++n) gk += Poly(g[n].num().constant_term()) * mono(Var::T, n);
    x += gk * Poly(Rational(2) / factorial(k)) * mono(Var::u, static_cast<unsigned>(k));
  }
  Poly ex(1);
  Poly power(1);
  for (int j = 1; 2 * j <= u_order; ++j) {
    power = truncate_uT(power * x, u_order, n_max);
    ex += power * Poly(Rational(1) / factorial(j));
  }
  const Poly rhs = truncate_uT(sinh_part * ex, u_order, n_max);

  const auto lc = lhs.coefficients_in(Var::T);
  const auto rc = rhs.coefficients_in(Var::T);
  r.holds = true;
  for (int n = 0; n <= n_max; ++n) {
    const Poly l = static_cast<std::size_t>(n) < lc.size() ? lc[static_cast<std::size_t>(n)] : Poly();
    const Poly rr = static_cast<std::size_t>(n) < rc.size() ? rc[static_cast<std::size_t>(n)] : Poly();
    DegreeVerdict v{n, l == rr, l, rr};
    if (n == 0) r.normalization_holds = v.equal;
    r.holds = r.holds && v.equal;
    r.degrees.push_back(std::move(v));
  }
  return r;
}

}  // namespace hlv
