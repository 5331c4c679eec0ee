#pragma once

#include <stdexcept>
#include <vector>

#include "hlv/symfunc/symfunc.hpp"

namespace hlv {

int mobius(int n);

// Plethystic Exp and Log on graded pieces. pieces[d] is the homogeneous part
// of degree d in whatever grading the caller uses (total degree, or the
// exponent of a marker variable carried in the coefficients). All pieces must
// be in the power-sum basis. The grading must be compatible with products
// and with ψ_r multiplying degrees by r.
template <class Coeff>
std::vector<BasicSymFunc<Coeff>> exp_pieces(const std::vector<BasicSymFunc<Coeff>>& f) {
  if (f.empty()) throw std::invalid_argument("empty series");
  if (!f[0].is_zero()) throw std::invalid_argument("plethystic exponential needs zero constant term");
  const int top = static_cast<int>(f.size()) - 1;
  const int k = f[0].k();
  const int trunc = f[0].truncation();
  std::vector<BasicSymFunc<Coeff>> g(f.size(), BasicSymFunc<Coeff>(k, trunc));
  for (int d = 1; d <= top; ++d) {
    for (int r = 1; r <= d; ++r) {
      if (d % r != 0 || f[static_cast<std::size_t>(d / r)].is_zero()) continue;
      g[static_cast<std::size_t>(d)] += adams(f[static_cast<std::size_t>(d / r)], static_cast<unsigned>(r), -1, true) *
                                        Coeff(Rational(1, r));
    }
  }
  std::vector<BasicSymFunc<Coeff>> e(f.size(), BasicSymFunc<Coeff>(k, trunc));
  e[0] = BasicSymFunc<Coeff>::constant(k, trunc, Coeff(Rational(1)));
  for (int d = 1; d <= top; ++d) {
    BasicSymFunc<Coeff> acc(k, trunc);
    for (int j = 1; j <= d; ++j) {
      const auto& gj = g[static_cast<std::size_t>(j)];
      if (gj.is_zero() || e[static_cast<std::size_t>(d - j)].is_zero()) continue;
      acc += (gj * e[static_cast<std::size_t>(d - j)]) * Coeff(Rational(j));
    }
    e[static_cast<std::size_t>(d)] = acc * Coeff(Rational(1, d));
  }
  return e;
}

template <class Coeff>
std::vector<BasicSymFunc<Coeff>> log_pieces(const std::vector<BasicSymFunc<Coeff>>& omega) {
  if (omega.empty()) throw std::invalid_argument("empty series");
  const int k = omega[0].k();
  const int trunc = omega[0].truncation();
  if (!(omega[0] == BasicSymFunc<Coeff>::constant(k, trunc, Coeff(Rational(1))))) {
    throw std::invalid_argument("plethystic logarithm needs constant term 1");
  }
  const int top = static_cast<int>(omega.size()) - 1;
  // Ordinary logarithm: d Ω_d = Σ_{j=1}^{d} j V_j Ω_{d-j}.
  std::vector<BasicSymFunc<Coeff>> v(omega.size(), BasicSymFunc<Coeff>(k, trunc));
  for (int d = 1; d <= top; ++d) {
    BasicSymFunc<Coeff> acc(k, trunc);
    for (int j = 1; j < d; ++j) {
      const auto& vj = v[static_cast<std::size_t>(j)];
      if (vj.is_zero() || omega[static_cast<std::size_t>(d - j)].is_zero()) continue;
      acc += (vj * omega[static_cast<std::size_t>(d - j)]) * Coeff(Rational(j));
    }
    v[static_cast<std::size_t>(d)] = omega[static_cast<std::size_t>(d)] - acc * Coeff(Rational(1, d));
  }
  std::vector<BasicSymFunc<Coeff>> out(omega.size(), BasicSymFunc<Coeff>(k, trunc));
  for (int d = 1; d <= top; ++d) {
    for (int r = 1; r <= d; ++r) {
      const int mu = mobius(r);
      if (d % r != 0 || mu == 0 || v[static_cast<std::size_t>(d / r)].is_zero()) continue;
      out[static_cast<std::size_t>(d)] +=
          adams(v[static_cast<std::size_t>(d / r)], static_cast<unsigned>(r), -1, true) * Coeff(Rational(mu, r));
    }
  }
  return out;
}

// Splits f by total degree into pieces 0..(k * truncation), in the p basis.
template <class Coeff>
std::vector<BasicSymFunc<Coeff>> pieces_by_degree(const BasicSymFunc<Coeff>& f) {
  const auto pf = convert_basis(f, Basis::p);
  std::vector<BasicSymFunc<Coeff>> pieces(static_cast<std::size_t>(f.k() * f.truncation() + 1),
                                          BasicSymFunc<Coeff>(f.k(), f.truncation()));
  for (const auto& [key, c] : pf.terms()) {
    pieces[static_cast<std::size_t>(BasicSymFunc<Coeff>::degree(key))].add_term(key, c);
  }
  return pieces;
}

template <class Coeff>
BasicSymFunc<Coeff> sum_pieces(const std::vector<BasicSymFunc<Coeff>>& pieces) {
  BasicSymFunc<Coeff> out(pieces.front().k(), pieces.front().truncation());
  for (const auto& p : pieces) out += p;
  return out;
}

// Exp(F) = exp(Σ ψ_r(F)/r), graded by total degree.
template <class Coeff>
BasicSymFunc<Coeff> plethystic_exp(const BasicSymFunc<Coeff>& f) {
  return sum_pieces(exp_pieces(pieces_by_degree(f)));
}

// Log(Ω) = Σ μ(r)/r ψ_r(log Ω), graded by total degree.
template <class Coeff>
BasicSymFunc<Coeff> plethystic_log(const BasicSymFunc<Coeff>& omega) {
  return sum_pieces(log_pieces(pieces_by_degree(omega)));
}

// Versions graded by the exponent of the variable T in the coefficients,
// through T^order. Coefficients must be polynomial in T.
std::vector<SymFunc> pieces_by_variable(const SymFunc& f, Var v, unsigned order);
SymFunc plethystic_exp_graded(const SymFunc& f, Var v, unsigned order);
SymFunc plethystic_log_graded(const SymFunc& omega, Var v, unsigned order);

// Power sums of a specialised alphabet, p_r for r = 1..N (index 0 unused).
struct SpecializedAlphabet {
  std::vector<RationalFunction> power_sums;

  // {1, q, q^2, ...}: p_r = 1/(1 - q^r).
  static SpecializedAlphabet geometric(int n);
  // {1, 1, q^2, q^3, ...}: p_r = 1/(1 - q^r) - q^r + 1.
  static SpecializedAlphabet printed(int n);
};

// s_λ(x_i y) as a symmetric function in alphabet i of k, via
// p_r(x y) = p_r(x) p_r(y).
SymFunc product_alphabet_schur(const Partition& lambda, const SpecializedAlphabet& y, int alphabet, int k,
                               int truncation);

}  // namespace hlv
