#include "hlv/kernel/kernel.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "hlv/arith/text.hpp"
#include "hlv/error.hpp"
#include "hlv/kernel/log_coefficients.hpp"
#include "hlv/macdonald/macdonald.hpp"

namespace hlv {

namespace {

const RationalFunction kZ = RationalFunction::variable(Var::z);
const RationalFunction kW = RationalFunction::variable(Var::w);
const RationalFunction kQ = RationalFunction::variable(Var::q);
const RationalFunction kT = RationalFunction::variable(Var::t);
const RationalFunction kS = RationalFunction::variable(Var::s);

struct KernelStore {
  std::mutex mutex;
  std::map<std::pair<Partition, Partition>, RationalFunction> htilde;
  std::map<std::pair<Partition, int>, RationalFunction> hooks;
  std::map<std::pair<Partition, int>, RationalFunction> hooks_q;
  std::map<std::pair<Partition, YConvention>, SymFunc> schur_y;
  std::map<std::pair<MultiPartition, int>, HLVResult> results;
};

KernelStore& kernel_store() {
  static KernelStore s;
  return s;
}

// Engines carry their own memo tables and are used under their own lock.
struct Engine {
  std::mutex mutex;
  std::unique_ptr<LogCoefficients> log;
};

template <class Key>
Engine& engine_for(std::map<Key, std::unique_ptr<Engine>>& engines, std::mutex& mutex, const Key& key,
                   int k, LogCoefficients::Coefficient coefficient) {
  std::lock_guard lock(mutex);
  auto& slot = engines[key];
  if (!slot) {
    slot = std::make_unique<Engine>();
    slot->log = std::make_unique<LogCoefficients>(k, std::move(coefficient));
  }
  return *slot;
}

const RationalFunction& cached_hook(const Partition& lambda, int g) {
  KernelStore& s = kernel_store();
  {
    std::lock_guard lock(s.mutex);
    if (auto it = s.hooks.find({lambda, g}); it != s.hooks.end()) return it->second;
  }
  RationalFunction h = hook_term(lambda, g);
  std::lock_guard lock(s.mutex);
  return s.hooks.emplace(std::make_pair(lambda, g), std::move(h)).first->second;
}

const RationalFunction& cached_hook_q(const Partition& lambda, int g) {
  KernelStore& s = kernel_store();
  {
    std::lock_guard lock(s.mutex);
    if (auto it = s.hooks_q.find({lambda, g}); it != s.hooks_q.end()) return it->second;
  }
  RationalFunction h = hook_term_at_sqrt_q(lambda, g);
  std::lock_guard lock(s.mutex);
  return s.hooks_q.emplace(std::make_pair(lambda, g), std::move(h)).first->second;
}

// s_λ(x y) in the monomial basis of one alphabet.
const SymFunc& schur_of_product(const Partition& lambda, YConvention y) {
  KernelStore& s = kernel_store();
  {
    std::lock_guard lock(s.mutex);
    if (auto it = s.schur_y.find({lambda, y}); it != s.schur_y.end()) return it->second;
  }
  const int n = lambda.size();
  SymFunc f = convert_basis(product_alphabet_schur(lambda, y_alphabet(y, n), 0, 1, n), Basis::m);
  std::lock_guard lock(s.mutex);
  return s.schur_y.emplace(std::make_pair(lambda, y), std::move(f)).first->second;
}

RationalFunction omega_coefficient(const MonomialKey& nu, int g) {
  RationalFunction total;
  for (const auto& lambda : enumerate_partitions(nu.front().size())) {
    RationalFunction term = cached_hook(lambda, g);
    for (const auto& part : nu) {
      const RationalFunction& c = htilde_monomial_coefficient(lambda, part);
      if (c.is_zero()) {
        term = RationalFunction();
        break;
      }
      term *= c;
    }
    if (!term.is_zero()) total += term;
  }
  return total;
}

std::mutex& engines_mutex() {
  static std::mutex m;
  return m;
}

RationalFunction log_coefficient_of_omega(const MultiPartition& mu, int g) {
  static std::map<std::pair<int, int>, std::unique_ptr<Engine>> engines;
  Engine& e = engine_for(engines, engines_mutex(), std::make_pair(g, mu.k()), mu.k(),
                         [g](const MonomialKey& nu) { return omega_coefficient(nu, g); });
  std::lock_guard lock(e.mutex);
  return e.log->log_coefficient(mu.components());
}

// Right side of the expansion lemma: Σ_λ 𝓗_λ(√q,1/√q) (q^{-n(λ)} H_λ(q))^k Π s_λ(x_i y).
RationalFunction expansion_coefficient(const MonomialKey& nu, int g, YConvention y) {
  const int k = static_cast<int>(nu.size());
  RationalFunction total;
  for (const auto& lambda : enumerate_partitions(nu.front().size())) {
    RationalFunction term = cached_hook_q(lambda, g);
    const RationalFunction hook = RationalFunction::normalize(hook_polynomial(lambda), Poly::variable(Var::q, static_cast<unsigned>(lambda.n())));
    term *= hook.pow(k);
    for (const auto& part : nu) {
      const RationalFunction c = schur_of_product(lambda, y).coefficient({part});
      if (c.is_zero()) {
        term = RationalFunction();
        break;
      }
      term *= c;
    }
    if (!term.is_zero()) total += term;
  }
  return total;
}

RationalFunction expansion_log_coefficient(const MultiPartition& mu, int g, YConvention y) {
  static std::map<std::tuple<int, int, YConvention>, std::unique_ptr<Engine>> engines;
  Engine& e = engine_for(engines, engines_mutex(), std::make_tuple(g, mu.k(), y), mu.k(),
                         [g, y](const MonomialKey& nu) { return expansion_coefficient(nu, g, y); });
  std::lock_guard lock(e.mutex);
  return e.log->log_coefficient(mu.components());
}

RationalFunction s_power(long d) { return kS.pow(static_cast<int>(d)); }

Poly require_polynomial(const RationalFunction& f) {
  if (!f.is_polynomial()) throw MathError("internal inconsistency");
  return f.num();
}

void require_integral(const Poly& p) {
  for (const auto& term : p.terms()) {
    if (term.coeff.get_den() != 1) throw MathError("internal inconsistency");
  }
}

Poly e_from_hlv(const RationalFunction& h, long d) {
  const RationalFunction sub = h.substitute({{Var::z, kS.inverse()}, {Var::w, kS}}) * s_power(d);
  Poly e = even_s_to_q(require_polynomial(sub));
  require_integral(e);
  return e;
}

}  // namespace

const RationalFunction& htilde_monomial_coefficient(const Partition& lambda, const Partition& nu) {
  KernelStore& s = kernel_store();
  {
    std::lock_guard lock(s.mutex);
    if (auto it = s.htilde.find({lambda, nu}); it != s.htilde.end()) return it->second;
  }
  if (lambda.size() != nu.size()) throw std::invalid_argument("partitions of different sizes");
  const RationalFunction c = modified_Htilde(lambda, Basis::m).expansion.coefficient({nu});
  RationalFunction value = c.substitute({{Var::q, kZ.pow(2)}, {Var::t, kW.pow(2)}});
  std::lock_guard lock(s.mutex);
  return s.htilde.emplace(std::make_pair(lambda, nu), std::move(value)).first->second;
}

KernelSeries cauchy_series(int g, int k, int n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  if (k < 1) throw std::invalid_argument("need at least one puncture");
  KernelSeries out{g, k, n_max, {}};
  for (int d = 0; d <= n_max; ++d) {
    for (const auto& lambda : d == 0 ? std::vector<Partition>{Partition{}} : enumerate_partitions(d)) {
      KernelTerm term{lambda, d == 0 ? RationalFunction(1) : cached_hook(lambda, g), {}};
      for (int i = 0; i < k; ++i) {
        SymFunc f(k, n_max, Basis::m);
        if (d == 0) {
          f = SymFunc::constant(k, n_max, RationalFunction(1), Basis::m);
        } else {
          for (const auto& nu : enumerate_partitions(d)) {
            SymFunc::Key key(static_cast<std::size_t>(k));
            key[static_cast<std::size_t>(i)] = nu;
            f.add_term(key, htilde_monomial_coefficient(lambda, nu));
          }
        }
        term.htilde.push_back(std::move(f));
      }
      out.terms.push_back(std::move(term));
    }
  }
  return out;
}

HLVResult hlv_polynomial(const MultiPartition& mu_in, int g) {
  if (g < 0) throw std::invalid_argument("genus must be non-negative");
  const MultiPartition mu = mu_in.sorted();
  KernelStore& s = kernel_store();
  {
    std::lock_guard lock(s.mutex);
    if (auto it = s.results.find({mu, g}); it != s.results.end()) {
      HLVResult r = it->second;
      r.mu = mu_in;
      return r;
    }
  }
  const RationalFunction prefactor = (kZ * kZ - RationalFunction(1)) * (RationalFunction(1) - kW * kW);
  HLVResult r;
  r.mu = mu;
  r.g = g;
  r.d_mu = dimension_d_mu(mu, g);
  r.hlv = log_coefficient_of_omega(mu, g) * prefactor;
  r.is_polynomial = r.hlv.is_polynomial();
  if (!r.is_polynomial) r.witness = to_canonical(r.hlv.den());
  {
    std::lock_guard lock(s.mutex);
    s.results.emplace(std::make_pair(mu, g), r);
  }
  r.mu = mu_in;
  return r;
}

Poly even_s_to_q(const Poly& p) {
  std::vector<Poly::Term> out;
  out.reserve(p.size());
  for (const auto& term : p.terms()) {
    const unsigned e = term.mono.exponent(Var::s);
    if (e % 2 != 0) throw MathError("parity violation");
    out.push_back({term.mono.with_exponent(Var::s, 0) * Monomial::of(Var::q, e / 2), term.coeff});
  }
  return Poly::from_terms(std::move(out));
}

RationalFunction even_s_to_q(const RationalFunction& f) {
  auto has_odd = [](const Poly& p) {
    for (const auto& term : p.terms()) {
      if (term.mono.exponent(Var::s) % 2 != 0) return true;
    }
    return false;
  };
  Poly num = f.num();
  Poly den = f.den();
  if (has_odd(num)) {
    // An even function in lowest terms may have both parts odd.
    num = num.shifted(Monomial::of(Var::s));
    den = den.shifted(Monomial::of(Var::s));
  }
  return RationalFunction::normalize(even_s_to_q(num), even_s_to_q(den));
}

Poly e_polynomial(const MultiPartition& mu, int g) {
  const HLVResult r = hlv_polynomial(mu, g);
  return e_from_hlv(r.hlv, r.d_mu);
}

Poly kac_polynomial(const MultiPartition& mu, int g) {
  const HLVResult r = hlv_polynomial(mu, g);
  const RationalFunction sub = r.hlv.substitute({{Var::z, RationalFunction()}, {Var::w, kS}});
  Poly a = even_s_to_q(require_polynomial(sub));
  require_integral(a);
  return a;
}

Poly conjectural_mhp(const MultiPartition& mu, int g) {
  const HLVResult r = hlv_polynomial(mu, g);
  const RationalFunction ts = kT * kS;
  const RationalFunction sub =
      r.hlv.substitute({{Var::z, -kS.inverse()}, {Var::w, ts}}) * ts.pow(static_cast<int>(r.d_mu));
  Poly h = even_s_to_q(require_polynomial(sub));
  if (h.substitute(Var::t, Poly(-1)) != e_from_hlv(r.hlv, r.d_mu)) throw MathError("internal inconsistency");
  return h;
}

IdentityReport curious_duality_check(const MultiPartition& mu, int g) {
  const RationalFunction h = conjectural_mhp(mu, g);
  const long d = dimension_d_mu(mu, g);
  IdentityReport r;
  r.lhs = h.substitute(Var::q, (kQ * kT * kT).inverse());
  r.rhs = (kQ * kT).pow(static_cast<int>(-d)) * h;
  r.holds = r.lhs == r.rhs;
  return r;
}

IdentityReport palindromic_check(const MultiPartition& mu, int g) {
  const RationalFunction e = e_polynomial(mu, g);
  const long d = dimension_d_mu(mu, g);
  IdentityReport r;
  r.lhs = kQ.pow(static_cast<int>(d)) * e.substitute(Var::q, kQ.inverse());
  r.rhs = e;
  r.holds = r.lhs == r.rhs;
  return r;
}

ConnectednessReport connectedness_report(const MultiPartition& mu, int g) {
  const Poly e = e_polynomial(mu, g);
  ConnectednessReport r;
  if (e.is_zero()) return r;
  const unsigned low = e.min_degree(Var::q);
  r.lowest_exponent = low;
  r.coefficient = e.coefficient(Monomial::of(Var::q, low));
  r.unique_lowest_is_one = low == 0 && r.coefficient == 1;
  return r;
}

std::string y_convention_name(YConvention c) { return c == YConvention::geometric ? "geometric" : "printed"; }

YConvention parse_y_convention(const std::string& name) {
  if (name == "geometric") return YConvention::geometric;
  if (name == "printed") return YConvention::printed;
  throw std::invalid_argument("unknown y convention: " + name);
}

SpecializedAlphabet y_alphabet(YConvention c, int n) {
  return c == YConvention::geometric ? SpecializedAlphabet::geometric(n) : SpecializedAlphabet::printed(n);
}

RationalFunction hook_term_at_sqrt_q(const Partition& lambda, int g) {
  return even_s_to_q(cached_hook(lambda, g).substitute({{Var::z, kS}, {Var::w, kS.inverse()}}));
}

ALambdaResult a_lambda_series(const Partition& lambda, const MultiPartition& mu, int g, YConvention y) {
  if (lambda.size() != mu.n()) throw std::invalid_argument("partitions of different sizes");
  ALambdaResult r{lambda, cached_hook_q(lambda, g), std::nullopt, 0};
  const RationalFunction hook = RationalFunction::normalize(hook_polynomial(lambda), Poly::variable(Var::q, static_cast<unsigned>(lambda.n())));
  r.series *= hook.pow(mu.k());
  for (const auto& part : mu.components()) r.series *= schur_of_product(lambda, y).coefficient({part});
  if (r.series.is_zero()) return r;
  const Poly& num = r.series.num();
  const Poly& den = r.series.den();
  const unsigned vn = num.min_degree(Var::q);
  const unsigned vd = den.min_degree(Var::q);
  r.valuation = static_cast<int>(vn) - static_cast<int>(vd);
  r.leading = num.coefficient(Monomial::of(Var::q, vn)) / den.coefficient(Monomial::of(Var::q, vd));
  return r;
}

ValuationSweep valuation_sweep(const MultiPartition& mu, int g, YConvention y) {
  ValuationSweep out{mu, g, dimension_d_mu(mu, g), {}, {}, false};
  std::optional<int> best;
  for (const auto& lambda : enumerate_partitions(mu.n())) {
    ALambdaResult r = a_lambda_series(lambda, mu, g, y);
    if (r.valuation) {
      if (!best || *r.valuation < *best) {
        best = r.valuation;
        out.minimizers.clear();
      }
      if (*r.valuation == *best) out.minimizers.push_back(lambda);
    }
    out.entries.push_back(std::move(r));
  }
  const Partition ones(std::vector<int>(static_cast<std::size_t>(mu.n()), 1));
  if (out.minimizers.size() == 1 && out.minimizers.front() == ones) {
    const auto& e = out.entries.back();  // (1^n) comes last
    out.prediction_holds = e.valuation == 1 - out.d_mu / 2 && e.leading == 1;
  }
  return out;
}

ExpansionReport expansion_lemma_check(int g, int k, int n_max, YConvention y) {
  ExpansionReport out{g, k, n_max, y, {}, true};
  const RationalFunction qm1 = kQ - RationalFunction(1);
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& mu : enumerate_multipartitions_unordered(n, k)) {
      const RationalFunction h = hlv_polynomial(mu, g).hlv;
      ExpansionEntry e{mu, {}, {}, false};
      e.lhs = kQ * even_s_to_q(h.substitute({{Var::z, kS}, {Var::w, kS.inverse()}})) / (qm1 * qm1);
      e.rhs = expansion_log_coefficient(mu, g, y);
      e.equal = e.lhs == e.rhs;
      out.all_equal = out.all_equal && e.equal;
      out.entries.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace hlv
