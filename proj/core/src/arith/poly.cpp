#include "hlv/arith/poly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

#include "dense_layout.hpp"
#include "hlv/error.hpp"

namespace hlv {

namespace {

// Integer image of a polynomial: coefficients scaled by the lcm of their
// denominators.
struct IntegerImage {
  std::vector<Monomial> monos;
  std::vector<Integer> coeffs;
  Integer denominator = 1;

  explicit IntegerImage(const Poly& p) {
    denominator = p.denominator_lcm();
    monos.reserve(p.size());
    coeffs.reserve(p.size());
    for (const auto& t : p.terms()) {
      monos.push_back(t.mono);
      Integer c = t.coeff.get_num() * (denominator / t.coeff.get_den());
      coeffs.push_back(std::move(c));
    }
  }
};

std::array<unsigned, kNumVars> add_bounds(const std::array<unsigned, kNumVars>& a,
                                          const std::array<unsigned, kNumVars>& b) {
  std::array<unsigned, kNumVars> r{};
  for (std::size_t i = 0; i < kNumVars; ++i) r[i] = a[i] + b[i];
  return r;
}

Poly scale_shift(const Poly& p, const Monomial& m, const Rational& c) {
  std::vector<Poly::Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({t.mono * m, t.coeff * c});
  return Poly::from_sorted_terms(std::move(out));
}

constexpr std::size_t kDenseLimit = std::size_t{1} << 21;

}  // namespace

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

Poly Poly::variable(Var v, unsigned e) { return monomial(Monomial::of(v, e), Rational(1)); }

Poly Poly::monomial(const Monomial& m, const Rational& c) {
  Poly p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono > b.mono; });
  Poly p;
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

Poly Poly::from_sorted_terms(std::vector<Term> terms) {
  Poly p;
  p.terms_ = std::move(terms);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_.front().mono.is_one() && terms_.front().coeff == 1;
}

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return 0;
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.mono > key; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

unsigned Poly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
  return d;
}

unsigned Poly::min_degree(Var v) const {
  if (terms_.empty()) return 0;
  unsigned d = Monomial::kMaxExponent;
  for (const auto& t : terms_) d = std::min(d, t.mono.exponent(v));
  return d;
}

unsigned Poly::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

bool Poly::depends_on(Var v) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [v](const Term& t) { return t.mono.exponent(v) != 0; });
}

std::array<unsigned, kNumVars> Poly::degrees() const {
  std::array<unsigned, kNumVars> d{};
  for (const auto& t : terms_) {
    const auto e = t.mono.exponents();
    for (std::size_t i = 0; i < kNumVars; ++i) d[i] = std::max(d[i], e[i]);
  }
  return d;
}

Monomial Poly::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial g = terms_.front().mono;
  for (const auto& t : terms_) g = g.gcd(t.mono);
  return g;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = other.terms_;
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto i = terms_.begin();
  auto j = other.terms_.begin();
  while (i != terms_.end() && j != other.terms_.end()) {
    if (i->mono > j->mono) {
      out.push_back(std::move(*i++));
    } else if (j->mono > i->mono) {
      out.push_back(*j++);
    } else {
      Rational c = i->coeff + j->coeff;
      if (c != 0) out.push_back({i->mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i != terms_.end(); ++i) out.push_back(std::move(*i));
  for (; j != other.terms_.end(); ++j) out.push_back(*j);
  terms_ = std::move(out);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) { return *this += -other; }

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Poly& Poly::operator/=(const Rational& c) {
  if (c == 0) throw MathError("division by zero");
  for (auto& t : terms_) t.coeff /= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) return scale_shift(b, a.terms_.front().mono, a.terms_.front().coeff);
  if (b.size() == 1) return scale_shift(a, b.terms_.front().mono, b.terms_.front().coeff);

  const IntegerImage ia(a);
  const IntegerImage ib(b);
  const Integer den = ia.denominator * ib.denominator;
  const auto bounds = add_bounds(a.degrees(), b.degrees());
  const std::size_t products = a.size() * b.size();

  std::vector<Poly::Term> out;
  auto emit = [&](const Monomial& m, Integer& c) {
    if (c == 0) return;
    Rational r(c, den);
    r.canonicalize();
    out.push_back({m, std::move(r)});
  };

  auto layout = detail::DenseLayout::make(bounds, kDenseLimit);
  if (layout && layout->size <= 16 * products + 1024) {
    std::vector<Integer> acc(layout->size);
    std::vector<std::size_t> idx_b(b.size());
    for (std::size_t j = 0; j < ib.monos.size(); ++j) idx_b[j] = layout->index(ib.monos[j]);
    for (std::size_t i = 0; i < ia.monos.size(); ++i) {
      const std::size_t base = layout->index(ia.monos[i]);
      const mpz_srcptr ca = ia.coeffs[i].get_mpz_t();
      for (std::size_t j = 0; j < ib.monos.size(); ++j) {
        mpz_addmul(acc[base + idx_b[j]].get_mpz_t(), ca, ib.coeffs[j].get_mpz_t());
      }
    }
    for (std::size_t k = layout->size; k-- > 0;) {
      if (acc[k] != 0) emit(layout->decode(k), acc[k]);
    }
    return Poly::from_sorted_terms(std::move(out));
  }

  std::unordered_map<Monomial, std::size_t, MonomialHash> slot;
  slot.reserve(std::min<std::size_t>(products, std::size_t{1} << 22));
  std::vector<Monomial> monos;
  std::vector<Integer> acc;
  for (std::size_t i = 0; i < ia.monos.size(); ++i) {
    for (std::size_t j = 0; j < ib.monos.size(); ++j) {
      const Monomial m = ia.monos[i] * ib.monos[j];
      auto [it, inserted] = slot.try_emplace(m, acc.size());
      if (inserted) {
        monos.push_back(m);
        acc.emplace_back();
      }
      mpz_addmul(acc[it->second].get_mpz_t(), ia.coeffs[i].get_mpz_t(), ib.coeffs[j].get_mpz_t());
    }
  }
  std::vector<std::size_t> order(monos.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return monos[x] > monos[y]; });
  out.reserve(order.size());
  for (std::size_t k : order) emit(monos[k], acc[k]);
  return Poly::from_sorted_terms(std::move(out));
}

Poly Poly::pow(unsigned e) const {
  Poly result(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly Poly::shifted(const Monomial& m) const { return scale_shift(*this, m, Rational(1)); }

Poly Poly::unshifted(const Monomial& m) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.mono / m, t.coeff});
  return from_sorted_terms(std::move(out));
}

Poly Poly::adams(unsigned r) const {
  if (r == 1) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.mono.scaled(r), t.coeff});
  // Uniform scaling preserves lex order.
  return from_sorted_terms(std::move(out));
}

Poly Poly::stretch(Var v, unsigned factor) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.mono.with_exponent(v, t.mono.exponent(v) * factor), t.coeff});
  return from_terms(std::move(out));
}

Poly Poly::rename(Var from, Var to) const {
  if (from == to) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    const unsigned e = t.mono.exponent(from);
    Monomial m = t.mono.with_exponent(from, 0);
    m = m.with_exponent(to, m.exponent(to) + e);
    out.push_back({m, t.coeff});
  }
  return from_terms(std::move(out));
}

std::vector<Poly> Poly::coefficients_in(Var v) const {
  std::vector<std::vector<Term>> buckets(degree(v) + 1);
  for (const auto& t : terms_) {
    const unsigned e = t.mono.exponent(v);
    buckets[e].push_back({t.mono.with_exponent(v, 0), t.coeff});
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  // Clearing one variable keeps the relative lex order of the remaining terms.
  for (auto& b : buckets) out.push_back(from_sorted_terms(std::move(b)));
  if (terms_.empty()) out.assign(1, Poly{});
  return out;
}

Poly Poly::from_coefficients(Var v, const std::vector<Poly>& coeffs) {
  std::vector<Term> out;
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    for (const auto& t : coeffs[e].terms()) {
      out.push_back({t.mono.with_exponent(v, t.mono.exponent(v) + static_cast<unsigned>(e)), t.coeff});
    }
  }
  return from_terms(std::move(out));
}

Poly Poly::substitute(Var v, const Poly& value) const {
  if (!depends_on(v)) return *this;
  const auto coeffs = coefficients_in(v);
  Poly acc = coeffs.back();
  for (std::size_t e = coeffs.size() - 1; e-- > 0;) {
    acc = acc * value;
    acc += coeffs[e];
  }
  return acc;
}

Poly Poly::evaluate(Var v, const Rational& x) const {
  if (!depends_on(v)) return *this;
  std::vector<Rational> powers(degree(v) + 1);
  powers[0] = 1;
  for (std::size_t i = 1; i < powers.size(); ++i) powers[i] = powers[i - 1] * x;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    const unsigned e = t.mono.exponent(v);
    out.push_back({t.mono.with_exponent(v, 0), t.coeff * powers[e]});
  }
  return from_terms(std::move(out));
}

Poly Poly::truncated(Var v, unsigned max_degree) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono.exponent(v) <= max_degree) out.push_back(t);
  }
  return from_sorted_terms(std::move(out));
}

Integer Poly::denominator_lcm() const {
  Integer l = 1;
  for (const auto& t : terms_) {
    if (t.coeff.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  return l;
}

Rational Poly::content() const {
  if (terms_.empty()) return 0;
  Integer g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    if (g == 1) break;
  }
  Rational c(g, denominator_lcm());
  c.canonicalize();
  return c;
}

Poly Poly::primitive_part() const {
  if (terms_.empty()) return {};
  Rational c = content();
  if (leading_coefficient() < 0) c = -c;
  Poly p = *this;
  p /= c;
  return p;
}

Integer Poly::max_norm() const {
  Integer m = 0;
  for (const auto& t : terms_) {
    Integer a = abs(t.coeff.get_num());
    if (a > m) m = a;
  }
  return m;
}

namespace {

bool within(const std::array<unsigned, kNumVars>& e, const std::array<unsigned, kNumVars>& bound) {
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (e[i] > bound[i]) return false;
  }
  return true;
}

std::optional<Poly> divide_dense(const Poly& a, const Poly& b, const detail::DenseLayout& layout,
                                 const std::array<unsigned, kNumVars>& bound) {
  const Monomial lead = b.leading_term().mono;
  std::vector<std::array<unsigned, kNumVars>> b_exp;
  std::vector<std::size_t> b_idx;
  for (const auto& t : b.terms()) {
    b_exp.push_back(t.mono.exponents());
    b_idx.push_back(layout.index(t.mono));
  }
  const std::size_t lead_idx = b_idx.front();

  // Integer fast path: b integral with unit leading coefficient.
  const bool b_integral = b.denominator_lcm() == 1;
  const bool unit_lead = b_integral && abs(b.leading_coefficient().get_num()) == 1;

  std::vector<Poly::Term> quotient;
  if (unit_lead) {
    const IntegerImage ia(a);
    std::vector<Integer> acc(layout.size);
    for (std::size_t i = 0; i < ia.monos.size(); ++i) acc[layout.index(ia.monos[i])] = ia.coeffs[i];
    std::vector<Integer> bc;
    for (const auto& t : b.terms()) bc.push_back(t.coeff.get_num());
    const bool neg = bc.front() < 0;
    Integer qc;
    for (std::size_t k = layout.size; k-- > 0;) {
      if (acc[k] == 0) continue;
      const Monomial m = layout.decode(k);
      if (!lead.divides(m)) return std::nullopt;
      const Monomial qm = m / lead;
      const auto qe = qm.exponents();
      qc = neg ? Integer(-acc[k]) : acc[k];
      const std::size_t base = k - lead_idx;
      for (std::size_t j = 0; j < b_idx.size(); ++j) {
        std::array<unsigned, kNumVars> e{};
        for (std::size_t v = 0; v < kNumVars; ++v) e[v] = qe[v] + b_exp[j][v];
        if (!within(e, bound)) return std::nullopt;
        mpz_submul(acc[base + b_idx[j]].get_mpz_t(), qc.get_mpz_t(), bc[j].get_mpz_t());
      }
      Rational r(qc, ia.denominator);
      r.canonicalize();
      quotient.push_back({qm, std::move(r)});
    }
    return Poly::from_sorted_terms(std::move(quotient));
  }

  std::vector<Rational> acc(layout.size);
  for (const auto& t : a.terms()) acc[layout.index(t.mono)] = t.coeff;
  const Rational& lc = b.leading_coefficient();
  Rational tmp;
  for (std::size_t k = layout.size; k-- > 0;) {
    if (acc[k] == 0) continue;
    const Monomial m = layout.decode(k);
    if (!lead.divides(m)) return std::nullopt;
    const Monomial qm = m / lead;
    const auto qe = qm.exponents();
    Rational qc = acc[k] / lc;
    const std::size_t base = k - lead_idx;
    for (std::size_t j = 0; j < b_idx.size(); ++j) {
      std::array<unsigned, kNumVars> e{};
      for (std::size_t v = 0; v < kNumVars; ++v) e[v] = qe[v] + b_exp[j][v];
      if (!within(e, bound)) return std::nullopt;
      tmp = qc * b.terms()[j].coeff;
      acc[base + b_idx[j]] -= tmp;
    }
    quotient.push_back({qm, std::move(qc)});
  }
  return Poly::from_sorted_terms(std::move(quotient));
}

std::optional<Poly> divide_sparse(const Poly& a, const Poly& b) {
  std::map<Monomial, Rational, std::greater<>> rem;
  for (const auto& t : a.terms()) rem.emplace(t.mono, t.coeff);
  const Monomial lead = b.leading_term().mono;
  const Rational& lc = b.leading_coefficient();
  std::vector<Poly::Term> quotient;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lead.divides(it->first)) return std::nullopt;
    const Monomial qm = it->first / lead;
    Rational qc = it->second / lc;
    rem.erase(it);
    for (std::size_t j = 1; j < b.size(); ++j) {
      const auto& bt = b.terms()[j];
      const Monomial m = qm * bt.mono;
      Rational delta = qc * bt.coeff;
      auto [pos, inserted] = rem.try_emplace(m, -delta);
      if (!inserted) {
        pos->second -= delta;
        if (pos->second == 0) rem.erase(pos);
      }
    }
    quotient.push_back({qm, std::move(qc)});
  }
  return Poly::from_sorted_terms(std::move(quotient));
}

}  // namespace

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw MathError("division by zero");
  if (a.is_zero()) return Poly{};
  if (b.size() == 1) {
    const auto& bt = b.leading_term();
    std::vector<Poly::Term> out;
    out.reserve(a.size());
    for (const auto& t : a.terms()) {
      if (!bt.mono.divides(t.mono)) return std::nullopt;
      out.push_back({t.mono / bt.mono, t.coeff / bt.coeff});
    }
    return Poly::from_sorted_terms(std::move(out));
  }
  if (!b.leading_term().mono.divides(a.leading_term().mono)) return std::nullopt;
  if (!b.terms().back().mono.divides(a.terms().back().mono)) return std::nullopt;
  const auto bound = a.degrees();
  const auto bdeg = b.degrees();
  for (std::size_t i = 0; i < kNumVars; ++i) {
    if (bdeg[i] > bound[i]) return std::nullopt;
  }
  auto layout = detail::DenseLayout::make(bound, kDenseLimit);
  if (layout && layout->size <= 64 * a.size() + 4096) return divide_dense(a, b, *layout, bound);
  return divide_sparse(a, b);
}

}  // namespace hlv
