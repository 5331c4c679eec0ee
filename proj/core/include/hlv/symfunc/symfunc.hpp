#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "hlv/arith/rational_function.hpp"
#include "hlv/symfunc/transition.hpp"

namespace hlv {

namespace detail {
template <class Coeff>
bool coeff_is_zero(const Coeff& c) {
  return is_zero(c);
}
}  // namespace detail

// Symmetric function in k separate alphabets, truncated at degree N in each
// alphabet. Terms are keyed by k-tuples of partitions and share one basis.
//
// Coeff must support +, -, *, construction from Rational, and the free
// functions adams(c, r) and is_zero(c).
template <class Coeff>
class BasicSymFunc {
 public:
  using Key = std::vector<Partition>;
  using Terms = std::map<Key, Coeff>;

  BasicSymFunc(int k, int truncation, Basis basis = Basis::p) : k_(k), truncation_(truncation), basis_(basis) {
    if (k < 0 || truncation < 0) throw std::invalid_argument("bad symmetric function shape");
  }

  static BasicSymFunc constant(int k, int truncation, const Coeff& c, Basis basis = Basis::p) {
    BasicSymFunc f(k, truncation, basis);
    f.add_term(Key(static_cast<std::size_t>(k)), c);
    return f;
  }

  // c times the basis element indexed by λ in alphabet `alphabet`.
  static BasicSymFunc single(int k, int truncation, Basis basis, int alphabet, const Partition& lambda,
                             const Coeff& c = Coeff(Rational(1))) {
    BasicSymFunc f(k, truncation, basis);
    Key key(static_cast<std::size_t>(k));
    key.at(static_cast<std::size_t>(alphabet)) = lambda;
    f.add_term(key, c);
    return f;
  }

  [[nodiscard]] int k() const { return k_; }
  [[nodiscard]] int truncation() const { return truncation_; }
  [[nodiscard]] Basis basis() const { return basis_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  [[nodiscard]] bool fits(const Key& key) const {
    return std::all_of(key.begin(), key.end(), [&](const Partition& p) { return p.size() <= truncation_; });
  }

  static int degree(const Key& key) {
    int d = 0;
    for (const auto& p : key) d += p.size();
    return d;
  }

  [[nodiscard]] Coeff coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Coeff(Rational(0)) : it->second;
  }

  [[nodiscard]] Coeff constant_term() const { return coefficient(Key(static_cast<std::size_t>(k_))); }

  // Adds c to the coefficient of key; keys beyond the truncation are dropped.
  void add_term(const Key& key, const Coeff& c) {
    if (static_cast<int>(key.size()) != k_) throw std::invalid_argument("key has wrong number of alphabets");
    if (is_zero_coeff(c) || !fits(key)) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second = it->second + c;
      if (is_zero_coeff(it->second)) terms_.erase(it);
    }
  }

  BasicSymFunc& operator+=(const BasicSymFunc& o) {
    check_compatible(o);
    for (const auto& [key, c] : o.terms_) add_term(key, c);
    return *this;
  }

  BasicSymFunc& operator-=(const BasicSymFunc& o) {
    check_compatible(o);
    const Coeff minus_one(Rational(-1));
    for (const auto& [key, c] : o.terms_) add_term(key, c * minus_one);
    return *this;
  }

  BasicSymFunc& operator*=(const Coeff& c) {
    if (is_zero_coeff(c)) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second = it->second * c;
      if (is_zero_coeff(it->second)) {
        it = terms_.erase(it);
      } else {
        ++it;
      }
    }
    return *this;
  }

  friend BasicSymFunc operator+(BasicSymFunc a, const BasicSymFunc& b) { return a += b; }
  friend BasicSymFunc operator-(BasicSymFunc a, const BasicSymFunc& b) { return a -= b; }
  friend BasicSymFunc operator*(BasicSymFunc a, const Coeff& c) { return a *= c; }
  friend bool operator==(const BasicSymFunc&, const BasicSymFunc&) = default;

  [[nodiscard]] int max_degree() const {
    int d = 0;
    for (const auto& [key, c] : terms_) d = std::max(d, degree(key));
    return d;
  }

  // Terms of total degree d (summed over alphabets).
  [[nodiscard]] BasicSymFunc homogeneous_part(int d) const {
    BasicSymFunc out(k_, truncation_, basis_);
    for (const auto& [key, c] : terms_) {
      if (degree(key) == d) out.terms_.emplace_hint(out.terms_.end(), key, c);
    }
    return out;
  }

  [[nodiscard]] BasicSymFunc with_truncation(int truncation) const {
    BasicSymFunc out(k_, truncation, basis_);
    for (const auto& [key, c] : terms_) out.add_term(key, c);
    return out;
  }

  template <class Other, class F>
  [[nodiscard]] BasicSymFunc<Other> map_coefficients(F f) const {
    BasicSymFunc<Other> out(k_, truncation_, basis_);
    for (const auto& [key, c] : terms_) out.add_term(key, f(c));
    return out;
  }

  // Replaces the contents wholesale (used by conversions); basis must match the terms.
  static BasicSymFunc from_terms(int k, int truncation, Basis basis, Terms terms) {
    BasicSymFunc f(k, truncation, basis);
    f.terms_ = std::move(terms);
    return f;
  }

 private:
  static bool is_zero_coeff(const Coeff& c) { return detail::coeff_is_zero(c); }

  void check_compatible(const BasicSymFunc& o) const {
    if (o.k_ != k_) throw std::invalid_argument("symmetric functions in different numbers of alphabets");
    if (o.basis_ != basis_) throw std::invalid_argument("mixed bases");
  }

  int k_;
  int truncation_;
  Basis basis_;
  Terms terms_;
};

using SymFunc = BasicSymFunc<RationalFunction>;

// Rewrites f in the target basis, alphabet by alphabet.
template <class Coeff>
BasicSymFunc<Coeff> convert_basis(const BasicSymFunc<Coeff>& f, Basis target) {
  if (f.basis() == target) return f;
  using Key = typename BasicSymFunc<Coeff>::Key;
  typename BasicSymFunc<Coeff>::Terms out;
  const auto k = static_cast<std::size_t>(f.k());
  for (const auto& [key, c] : f.terms()) {
    std::vector<const SparseRow*> rows(k);
    for (std::size_t i = 0; i < k; ++i) {
      rows[i] = &transition(f.basis(), target, key[i].size())[static_cast<std::size_t>(partition_index(key[i]))];
    }
    // Cartesian product of the per-alphabet rows.
    std::vector<std::size_t> pos(k, 0);
    while (true) {
      Rational scale = 1;
      Key nk(k);
      for (std::size_t i = 0; i < k; ++i) {
        const auto& [idx, val] = (*rows[i])[pos[i]];
        scale *= val;
        nk[i] = enumerate_partitions(key[i].size())[static_cast<std::size_t>(idx)];
      }
      Coeff term = c * Coeff(scale);
      auto [it, inserted] = out.try_emplace(std::move(nk), term);
      if (!inserted) it->second = it->second + term;
      std::size_t i = 0;
      while (i < k && ++pos[i] == rows[i]->size()) pos[i++] = 0;
      if (i == k) break;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = is_zero(it->second) ? out.erase(it) : std::next(it);
  }
  return BasicSymFunc<Coeff>::from_terms(f.k(), f.truncation(), target, std::move(out));
}

// Product, computed in the power-sum basis.
template <class Coeff>
BasicSymFunc<Coeff> operator*(const BasicSymFunc<Coeff>& a, const BasicSymFunc<Coeff>& b) {
  if (a.k() != b.k()) throw std::invalid_argument("symmetric functions in different numbers of alphabets");
  const auto pa = convert_basis(a, Basis::p);
  const auto pb = convert_basis(b, Basis::p);
  BasicSymFunc<Coeff> out(a.k(), std::min(a.truncation(), b.truncation()), Basis::p);
  typename BasicSymFunc<Coeff>::Key key(static_cast<std::size_t>(a.k()));
  for (const auto& [ka, ca] : pa.terms()) {
    for (const auto& [kb, cb] : pb.terms()) {
      bool fits = true;
      for (std::size_t i = 0; i < key.size(); ++i) {
        if (ka[i].size() + kb[i].size() > out.truncation()) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      for (std::size_t i = 0; i < key.size(); ++i) {
        if (ka[i].empty()) {
          key[i] = kb[i];
        } else if (kb[i].empty()) {
          key[i] = ka[i];
        } else {
          std::vector<int> parts = ka[i].parts();
          parts.insert(parts.end(), kb[i].parts().begin(), kb[i].parts().end());
          key[i] = Partition(std::move(parts));
        }
      }
      out.add_term(key, ca * cb);
    }
  }
  return out;
}

// Extended Hall pairing with <p_λ, p_ν> = δ z_λ in every alphabet.
template <class Coeff>
Coeff hall_pairing(const BasicSymFunc<Coeff>& f, const BasicSymFunc<Coeff>& g) {
  if (f.k() != g.k()) throw std::invalid_argument("symmetric functions in different numbers of alphabets");
  auto direct = [](const BasicSymFunc<Coeff>& a, const BasicSymFunc<Coeff>& b, bool weighted) {
    Coeff total(Rational(0));
    for (const auto& [key, c] : a.terms()) {
      auto it = b.terms().find(key);
      if (it == b.terms().end()) continue;
      Coeff term = c * it->second;
      if (weighted) {
        Integer z = 1;
        for (const auto& p : key) z *= p.z();
        term = term * Coeff(Rational(z));
      }
      total = total + term;
    }
    return total;
  };
  const Basis bf = f.basis();
  const Basis bg = g.basis();
  if ((bf == Basis::h && bg == Basis::m) || (bf == Basis::m && bg == Basis::h) ||
      (bf == Basis::s && bg == Basis::s)) {
    return direct(f, g, false);
  }
  if (bf == Basis::h || bf == Basis::m) {
    return direct(f, convert_basis(g, bf == Basis::h ? Basis::m : Basis::h), false);
  }
  if (bg == Basis::h || bg == Basis::m) {
    return direct(convert_basis(f, bg == Basis::h ? Basis::m : Basis::h), g, false);
  }
  return direct(convert_basis(f, Basis::p), convert_basis(g, Basis::p), true);
}

// ψ_r: p_m -> p_{rm} in every alphabet and x -> x^r on coefficients. Throws
// std::out_of_range "truncation overflow" if a term leaves the output
// truncation (default: the input truncation), unless drop_overflow is set,
// in which case such terms are discarded as in the truncated ring.
template <class Coeff>
BasicSymFunc<Coeff> adams(const BasicSymFunc<Coeff>& f, unsigned r, int out_truncation = -1,
                          bool drop_overflow = false) {
  if (r == 0) throw std::invalid_argument("Adams operation index must be positive");
  const int trunc = out_truncation < 0 ? f.truncation() : out_truncation;
  const auto pf = convert_basis(f, Basis::p);
  BasicSymFunc<Coeff> out(f.k(), trunc, Basis::p);
  for (const auto& [key, c] : pf.terms()) {
    typename BasicSymFunc<Coeff>::Key nk;
    nk.reserve(key.size());
    for (const auto& p : key) {
      std::vector<int> parts = p.parts();
      for (auto& x : parts) x *= static_cast<int>(r);
      nk.emplace_back(std::move(parts));
    }
    if (!out.fits(nk)) {
      if (drop_overflow) continue;
      throw std::out_of_range("truncation overflow");
    }
    out.add_term(nk, adams(c, r));
  }
  return out;
}

}  // namespace hlv
