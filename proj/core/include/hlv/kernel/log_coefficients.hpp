#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "hlv/arith/rational_function.hpp"
#include "hlv/partitions/partition.hpp"

namespace hlv {

// One partition per alphabet, all of the same size (the empty tuple entry is
// the empty partition).
using MonomialKey = std::vector<Partition>;

// Monomial coefficients of Log F for a series F = 1 + F_1 + F_2 + ... in k
// alphabets whose degree-d part has degree d in every alphabet. F is given
// through its monomial coefficients: coefficient(ν) is the coefficient of
// x_1^{ν^1} ... x_k^{ν^k}, which for a symmetric F is <F, h_ν>. ψ_r raises
// every coefficient variable to the r-th power.
//
// Since pairing with h_μ reads off a single monomial coefficient, the
// ordinary logarithm and the products it needs only ever touch monomials
// dividing x^μ, and ψ_r only touches x^{μ/r}.
class LogCoefficients {
 public:
  using Coefficient = std::function<RationalFunction(const MonomialKey&)>;

  LogCoefficients(int k, Coefficient coefficient);

  [[nodiscard]] int k() const { return k_; }

  // <Log F, h_μ>.
  RationalFunction log_coefficient(const MonomialKey& mu);
  // <log F, h_ν> for the ordinary logarithm.
  const RationalFunction& ordinary_log(const MonomialKey& nu);
  // <F, h_ν>, memoised.
  const RationalFunction& series(const MonomialKey& nu);

 private:
  using PairCounts = std::map<std::pair<MonomialKey, MonomialKey>, long>;
  const PairCounts& splittings(const MonomialKey& nu);

  int k_;
  Coefficient coefficient_;
  std::map<MonomialKey, RationalFunction> series_;
  std::map<MonomialKey, RationalFunction> log_;
  std::map<MonomialKey, PairCounts> splittings_;
};

// Sorts each alphabet's exponents into a partition; checks the tuple shape.
MonomialKey monomial_key(const std::vector<std::vector<int>>& exponents);

}  // namespace hlv
