#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hlv/partitions/multipartition.hpp"
#include "hlv/symfunc/plethysm.hpp"

namespace hlv {

struct KernelTerm {
  Partition lambda;
  RationalFunction hook;          // 𝓗_λ(z, w)
  std::vector<SymFunc> htilde;    // H̃_λ(x_i; z², w²) in alphabet i of k, m basis
};

// Ω(z, w) = Σ_λ 𝓗_λ(z, w) Π_i H̃_λ(x_i; z², w²) through |λ| <= n_max.
struct KernelSeries {
  int g = 0;
  int k = 0;
  int n_max = 0;
  std::vector<KernelTerm> terms;  // by |λ|, then as enumerate_partitions
};

KernelSeries cauchy_series(int g, int k, int n_max);

// <H̃_λ(x; z², w²), h_ν> for |ν| = |λ|.
const RationalFunction& htilde_monomial_coefficient(const Partition& lambda, const Partition& nu);

struct HLVResult {
  MultiPartition mu;
  int g = 0;
  long d_mu = 0;
  RationalFunction hlv;  // ℍ_μ(z, w), reduced
  bool is_polynomial = false;
  std::string witness;   // canonical denominator when not a polynomial
};

// ℍ_μ(z, w) = (z² - 1)(1 - w²) <Log Ω(z, w), h_μ>. Memoised per (sorted μ, g).
HLVResult hlv_polynomial(const MultiPartition& mu, int g);

// E(q) = q^{d/2} ℍ_μ(1/√q, √q).
Poly e_polynomial(const MultiPartition& mu, int g);
// A_μ(q) = ℍ_μ(0, √q).
Poly kac_polynomial(const MultiPartition& mu, int g);
// H_c(q, t) = (t√q)^d ℍ_μ(-1/√q, t√q); checked against E at t = -1.
Poly conjectural_mhp(const MultiPartition& mu, int g);

// Rewrites a polynomial in s with only even powers as a polynomial in q = s².
// Throws MathError "parity violation" otherwise.
Poly even_s_to_q(const Poly& p);
// The same for an even rational function of s.
RationalFunction even_s_to_q(const RationalFunction& f);

struct IdentityReport {
  bool holds = false;
  RationalFunction lhs;
  RationalFunction rhs;
};

// H_c(1/(q t²), t) = (q t)^{-d} H_c(q, t).
IdentityReport curious_duality_check(const MultiPartition& mu, int g);
// q^d E(1/q) = E(q).
IdentityReport palindromic_check(const MultiPartition& mu, int g);

struct ConnectednessReport {
  std::optional<unsigned> lowest_exponent;  // empty when E = 0
  Rational coefficient;
  bool unique_lowest_is_one = false;        // E(0) = 1
};
ConnectednessReport connectedness_report(const MultiPartition& mu, int g);

enum class YConvention { geometric, printed };
std::string y_convention_name(YConvention c);
YConvention parse_y_convention(const std::string& name);
SpecializedAlphabet y_alphabet(YConvention c, int n);

// 𝓗_λ(√q, 1/√q) as a rational function of q.
RationalFunction hook_term_at_sqrt_q(const Partition& lambda, int g);

struct ALambdaResult {
  Partition lambda;
  RationalFunction series;  // 𝓐_λ(q)
  std::optional<int> valuation;
  Rational leading;
};

// 𝓐_λ(q) = 𝓗_λ(√q, 1/√q) (q^{-n(λ)} H_λ(q))^k Π_i <h_{μ^i}, s_λ(x_i y)>.
ALambdaResult a_lambda_series(const Partition& lambda, const MultiPartition& mu, int g,
                              YConvention y = YConvention::geometric);

struct ValuationSweep {
  MultiPartition mu;
  int g = 0;
  long d_mu = 0;
  std::vector<ALambdaResult> entries;
  std::vector<Partition> minimizers;
  // Minimiser unique and equal to (1^n), valuation 1 - d/2, leading coefficient 1.
  bool prediction_holds = false;
};
ValuationSweep valuation_sweep(const MultiPartition& mu, int g, YConvention y = YConvention::geometric);

struct ExpansionEntry {
  MultiPartition mu;
  RationalFunction lhs;  // q ℍ_μ(√q, 1/√q) / (q - 1)²
  RationalFunction rhs;  // <Log(...), h_μ>
  bool equal = false;
};
struct ExpansionReport {
  int g = 0;
  int k = 0;
  int n_max = 0;
  YConvention y = YConvention::geometric;
  std::vector<ExpansionEntry> entries;
  bool all_equal = false;
};
ExpansionReport expansion_lemma_check(int g, int k, int n_max, YConvention y = YConvention::geometric);

}  // namespace hlv
