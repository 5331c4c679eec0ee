#pragma once

#include <vector>

#include "hlv/arith/series.hpp"
#include "hlv/partitions/partition.hpp"

namespace hlv {

struct BoxGenerating {
  Partition lambda;
  Poly poly;  // Σ_{(i,j) ∈ λ} z^{j-1} w^{i-1}
};

BoxGenerating phi_lambda(const Partition& lambda);

// Π_{n>=1} (1 + t^{2n+1} q^n T^n)² / ((1 - q^{n-1} t^{2n} T^n)(1 - t^{2n+2} q^{n+1} T^n))
// through T^n_max; the T^n coefficient is the mixed Hodge polynomial of the
// Hilbert scheme of n points on C* x C*.
TruncatedSeries goettsche_series(int n_max);

struct DegreeVerdict {
  int degree = 0;
  bool equal = false;
  RationalFunction lhs;
  RationalFunction rhs;
};

struct HilbertReport {
  std::vector<DegreeVerdict> specialized;  // (z, w) = (1/s, s), with q = s²
  std::vector<DegreeVerdict> full;         // generic (z, w)
  bool specialized_holds = false;
  bool full_holds = false;
};

// 1 + (z²-1)(1-w²) Σ 𝓗_λ φ_λ(z², w²) T^|λ| / Σ 𝓗_λ T^|λ|
//   = Π_{n>=1} (1 - z w T^n)² / ((1 - z² T^n)(1 - w² T^n)),  with g = 1,
// compared degree by degree through T^specialized_max at (1/s, s) and
// through T^full_max for generic (z, w).
HilbertReport hilbert_identity_check(int specialized_max, int full_max);

// Bernoulli number B_n (B_1 = -1/2).
Rational bernoulli(int n);

// G_k = -B_k/(2k) + Σ_{n>=1} σ_{k-1}(n) T^n for even k >= 2.
TruncatedSeries eisenstein_G(int k, int n_max);

struct QuasimodularReport {
  int n_max = 0;
  int u_order = 0;
  bool normalization_holds = false;  // the T^0 identity
  std::vector<DegreeVerdict> degrees;  // per T-degree, both sides as polynomials in u
  bool holds = false;
};

// 1 + Σ_n ℍ_{(n-1,1)}(e^{u/2}, e^{-u/2}) T^n
//   = (1/u)(e^{u/2} - e^{-u/2}) exp(2 Σ_{k>=2 even} G_k u^k / k!),  g = 1,
// through T^n_max and u^u_order.
QuasimodularReport quasimodular_check(int n_max, int u_order = 8);

}  // namespace hlv
