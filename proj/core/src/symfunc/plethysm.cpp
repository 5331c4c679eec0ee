#include "hlv/symfunc/plethysm.hpp"

namespace hlv {

int mobius(int n) {
  if (n < 1) throw std::invalid_argument("mobius of non-positive integer");
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

std::vector<SymFunc> pieces_by_variable(const SymFunc& f, Var v, unsigned order) {
  const auto pf = convert_basis(f, Basis::p);
  std::vector<SymFunc> pieces(order + 1, SymFunc(f.k(), f.truncation()));
  for (const auto& [key, c] : pf.terms()) {
    if (c.den().depends_on(v)) throw std::invalid_argument("coefficient is not polynomial in the grading variable");
    const auto parts = c.num().coefficients_in(v);
    for (unsigned d = 0; d < parts.size() && d <= order; ++d) {
      if (parts[d].is_zero()) continue;
      const Poly graded = parts[d].shifted(Monomial::of(v, d));
      pieces[d].add_term(key, RationalFunction::normalize(graded, c.den()));
    }
  }
  return pieces;
}

namespace {

SymFunc truncate_in(const SymFunc& f, Var v, unsigned order) {
  return sum_pieces(pieces_by_variable(f, v, order));
}

}  // namespace

SymFunc plethystic_exp_graded(const SymFunc& f, Var v, unsigned order) {
  auto e = exp_pieces(pieces_by_variable(f, v, order));
  // ψ_r of a piece can overshoot the order; drop those contributions.
  return truncate_in(sum_pieces(e), v, order);
}

SymFunc plethystic_log_graded(const SymFunc& omega, Var v, unsigned order) {
  auto l = log_pieces(pieces_by_variable(omega, v, order));
  return truncate_in(sum_pieces(l), v, order);
}

SpecializedAlphabet SpecializedAlphabet::geometric(int n) {
  SpecializedAlphabet a;
  a.power_sums.resize(static_cast<std::size_t>(n) + 1);
  for (int r = 1; r <= n; ++r) {
    a.power_sums[static_cast<std::size_t>(r)] =
        RationalFunction::normalize(Poly(1), Poly(1) - Poly::variable(Var::q, static_cast<unsigned>(r)));
  }
  return a;
}

SpecializedAlphabet SpecializedAlphabet::printed(int n) {
  SpecializedAlphabet a = geometric(n);
  for (int r = 1; r <= n; ++r) {
    auto& p = a.power_sums[static_cast<std::size_t>(r)];
    p = p - RationalFunction(Poly::variable(Var::q, static_cast<unsigned>(r))) + RationalFunction(1);
  }
  return a;
}

SymFunc product_alphabet_schur(const Partition& lambda, const SpecializedAlphabet& y, int alphabet, int k,
                               int truncation) {
  SymFunc out(k, truncation, Basis::p);
  const int n = lambda.size();
  if (n >= static_cast<int>(y.power_sums.size()) && n > 0) {
    throw std::out_of_range("alphabet power sums not available to this degree");
  }
  const auto& row = transition(Basis::s, Basis::p, n)[static_cast<std::size_t>(partition_index(lambda))];
  for (const auto& [idx, c] : row) {
    const Partition& rho = enumerate_partitions(n)[static_cast<std::size_t>(idx)];
    RationalFunction coeff(c);
    for (int part : rho.parts()) coeff *= y.power_sums[static_cast<std::size_t>(part)];
    SymFunc::Key key(static_cast<std::size_t>(k));
    key.at(static_cast<std::size_t>(alphabet)) = rho;
    out.add_term(key, coeff);
  }
  return out;
}

}  // namespace hlv
