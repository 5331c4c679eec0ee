#include "hlv/kernel/log_coefficients.hpp"

#include <numeric>
#include <stdexcept>

#include "hlv/symfunc/plethysm.hpp"

namespace hlv {

namespace {

int key_degree(const MonomialKey& key) { return key.empty() ? 0 : key.front().size(); }

// For one alphabet: (|b|, sort b, sort(ν - b)) -> number of b <= ν.
using AlphabetSplits = std::map<std::tuple<int, Partition, Partition>, long>;

AlphabetSplits alphabet_splits(const Partition& nu) {
  AlphabetSplits out;
  const auto& parts = nu.parts();
  std::vector<int> b(parts.size(), 0);
  while (true) {
    std::vector<int> rest(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) rest[i] = parts[i] - b[i];
    Partition pb(b);
    const int size = pb.size();
    ++out[{size, std::move(pb), Partition(std::move(rest))}];
    std::size_t i = 0;
    while (i < b.size() && ++b[i] > parts[i]) b[i++] = 0;
    if (i == b.size()) break;
  }
  return out;
}

}  // namespace

MonomialKey monomial_key(const std::vector<std::vector<int>>& exponents) {
  MonomialKey key;
  key.reserve(exponents.size());
  for (const auto& e : exponents) key.emplace_back(e);
  for (const auto& p : key) {
    if (p.size() != key.front().size()) throw std::invalid_argument("monomial with unequal alphabet degrees");
  }
  return key;
}

LogCoefficients::LogCoefficients(int k, Coefficient coefficient) : k_(k), coefficient_(std::move(coefficient)) {
  if (k < 1) throw std::invalid_argument("need at least one alphabet");
}

const RationalFunction& LogCoefficients::series(const MonomialKey& nu) {
  if (auto it = series_.find(nu); it != series_.end()) return it->second;
  RationalFunction value = key_degree(nu) == 0 ? RationalFunction(1) : coefficient_(nu);
  return series_.emplace(nu, std::move(value)).first->second;
}

const LogCoefficients::PairCounts& LogCoefficients::splittings(const MonomialKey& nu) {
  if (auto it = splittings_.find(nu); it != splittings_.end()) return it->second;
  const int d = key_degree(nu);
  // Combine the per-alphabet splittings with a common size j, 0 < j < d.
  std::vector<std::map<int, std::vector<std::pair<std::pair<Partition, Partition>, long>>>> by_size(
      static_cast<std::size_t>(k_));
  for (std::size_t i = 0; i < nu.size(); ++i) {
    for (const auto& [entry, count] : alphabet_splits(nu[i])) {
      const auto& [size, b, c] = entry;
      if (size > 0 && size < d) by_size[i][size].push_back({{b, c}, count});
    }
  }
  PairCounts out;
  for (int j = 1; j < d; ++j) {
    std::vector<const std::vector<std::pair<std::pair<Partition, Partition>, long>>*> lists;
    for (auto& m : by_size) lists.push_back(&m[j]);
    std::vector<std::size_t> pos(lists.size(), 0);
    bool empty = false;
    for (const auto* l : lists) empty = empty || l->empty();
    if (empty) continue;
    while (true) {
      MonomialKey kb;
      MonomialKey kc;
      long count = 1;
      for (std::size_t i = 0; i < lists.size(); ++i) {
        const auto& [bc, n] = (*lists[i])[pos[i]];
        kb.push_back(bc.first);
        kc.push_back(bc.second);
        count *= n;
      }
      out[{std::move(kb), std::move(kc)}] += count;
      std::size_t i = 0;
      while (i < lists.size() && ++pos[i] == lists[i]->size()) pos[i++] = 0;
      if (i == lists.size()) break;
    }
  }
  return splittings_.emplace(nu, std::move(out)).first->second;
}

const RationalFunction& LogCoefficients::ordinary_log(const MonomialKey& nu) {
  if (static_cast<int>(nu.size()) != k_) throw std::invalid_argument("monomial has wrong number of alphabets");
  if (auto it = log_.find(nu); it != log_.end()) return it->second;
  const int d = key_degree(nu);
  RationalFunction value;
  if (d > 0) {
    // d log_d = d F_d - Σ_{0<j<d} j log_j F_{d-j}, read off at x^ν.
    RationalFunction acc;
    for (const auto& [pair, count] : splittings(nu)) {
      const RationalFunction& f = series(pair.second);
      if (f.is_zero()) continue;
      const RationalFunction& v = ordinary_log(pair.first);
      if (v.is_zero()) continue;
      acc += v * f * RationalFunction(Rational(count * key_degree(pair.first)));
    }
    value = series(nu) - acc * RationalFunction(Rational(1, d));
  }
  return log_.emplace(nu, std::move(value)).first->second;
}

RationalFunction LogCoefficients::log_coefficient(const MonomialKey& mu) {
  if (static_cast<int>(mu.size()) != k_) throw std::invalid_argument("monomial has wrong number of alphabets");
  int g = 0;
  for (const auto& p : mu) g = std::gcd(g, p.parts_gcd());
  RationalFunction out;
  for (int r = 1; r <= g; ++r) {
    if (g % r != 0 || mobius(r) == 0) continue;
    MonomialKey sub;
    for (const auto& p : mu) {
      std::vector<int> parts = p.parts();
      for (auto& x : parts) x /= r;
      sub.emplace_back(std::move(parts));
    }
    const RationalFunction& v = ordinary_log(sub);
    if (v.is_zero()) continue;
    out += v.adams(static_cast<unsigned>(r)) * RationalFunction(Rational(mobius(r), r));
  }
  return out;
}

}  // namespace hlv
