#include "hlv/symfunc/transition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace hlv {

namespace {

using Dense = std::vector<std::vector<Rational>>;

Dense identity(std::size_t n) {
  Dense m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Dense invert(Dense a) {
  const std::size_t n = a.size();
  Dense inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("singular transition matrix");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational f = 1 / a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= f;
      inv[col][j] *= f;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational g = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= g * a[col][j];
        inv[r][j] -= g * inv[col][j];
      }
    }
  }
  return inv;
}

Dense multiply(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense c(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b[k][j] != 0) c[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return c;
}

using PExpansion = std::map<Partition, Rational>;

PExpansion p_product(const PExpansion& a, const PExpansion& b) {
  PExpansion out;
  for (const auto& [ra, ca] : a) {
    for (const auto& [rb, cb] : b) {
      std::vector<int> parts = ra.parts();
      parts.insert(parts.end(), rb.parts().begin(), rb.parts().end());
      out[Partition(std::move(parts))] += ca * cb;
    }
  }
  return out;
}

// h_n (sign = false) or e_n (sign = true) in the power-sum basis.
PExpansion elementary_in_p(int n, bool sign) {
  PExpansion out;
  for (const auto& rho : enumerate_partitions(n)) {
    Rational c(1, rho.z());
    c.canonicalize();
    if (sign && (n - rho.length()) % 2 != 0) c = -c;
    out[rho] = c;
  }
  return out;
}

// Matrix whose row λ is the p-expansion of the `from` basis element λ.
Dense to_power_sums(Basis from, int d) {
  const auto& parts = enumerate_partitions(d);
  const std::size_t n = parts.size();
  Dense m(n, std::vector<Rational>(n));
  switch (from) {
    case Basis::p:
      return identity(n);
    case Basis::m: {
      Dense r(n, std::vector<Rational>(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) r[i][j] = power_to_monomial(parts[i], parts[j]);
      }
      return invert(r);
    }
    case Basis::h:
    case Basis::e: {
      for (std::size_t i = 0; i < n; ++i) {
        PExpansion acc{{Partition{}, Rational(1)}};
        for (int part : parts[i].parts()) acc = p_product(acc, elementary_in_p(part, from == Basis::e));
        for (const auto& [rho, c] : acc) m[i][static_cast<std::size_t>(partition_index(rho))] = c;
      }
      return m;
    }
    case Basis::s: {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          Rational c(character(parts[i], parts[j]), parts[j].z());
          c.canonicalize();
          m[i][j] = c;
        }
      }
      return m;
    }
  }
  throw std::logic_error("unknown basis");
}

std::vector<SparseRow> sparse(const Dense& a) {
  std::vector<SparseRow> rows(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      if (a[i][j] != 0) rows[i].emplace_back(static_cast<int>(j), a[i][j]);
    }
  }
  return rows;
}

}  // namespace

char basis_name(Basis b) {
  switch (b) {
    case Basis::m: return 'm';
    case Basis::h: return 'h';
    case Basis::e: return 'e';
    case Basis::p: return 'p';
    case Basis::s: return 's';
  }
  return '?';
}

std::optional<Basis> parse_basis(std::string_view name) {
  if (name == "m") return Basis::m;
  if (name == "h") return Basis::h;
  if (name == "e") return Basis::e;
  if (name == "p") return Basis::p;
  if (name == "s") return Basis::s;
  return std::nullopt;
}

int partition_index(const Partition& lambda) {
  const auto& ps = enumerate_partitions(lambda.size());
  auto it = std::lower_bound(ps.begin(), ps.end(), lambda, std::greater<>());
  return static_cast<int>(it - ps.begin());
}

Integer character(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size()) return 0;
  if (lambda.empty()) return 1;
  // Remove a rim hook of length rho_1, working on beta-numbers.
  const int r = rho.parts().front();
  const Partition rest(std::vector<int>(rho.parts().begin() + 1, rho.parts().end()));
  const int len = lambda.length();
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda.part(i) + (len - 1 - i);
  Integer total = 0;
  for (int i = 0; i < len; ++i) {
    const int b = beta[static_cast<std::size_t>(i)];
    const int nb = b - r;
    if (nb < 0 || std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
    int crossed = 0;
    for (int x : beta) {
      if (x > nb && x < b) ++crossed;
    }
    std::vector<int> moved = beta;
    moved[static_cast<std::size_t>(i)] = nb;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> parts(static_cast<std::size_t>(len));
    for (int j = 0; j < len; ++j) parts[static_cast<std::size_t>(j)] = moved[static_cast<std::size_t>(j)] - (len - 1 - j);
    const Integer sub = character(Partition(std::move(parts)), rest);
    if (crossed % 2 == 0) {
      total += sub;
    } else {
      total -= sub;
    }
  }
  return total;
}

Integer power_to_monomial(const Partition& rho, const Partition& lambda) {
  if (rho.size() != lambda.size()) return 0;
  std::vector<int> room = lambda.parts();
  const auto& parts = rho.parts();
  std::function<Integer(std::size_t)> go = [&](std::size_t i) -> Integer {
    if (i == parts.size()) return 1;
    Integer count = 0;
    for (auto& slot : room) {
      if (slot >= parts[i]) {
        slot -= parts[i];
        count += go(i + 1);
        slot += parts[i];
      }
    }
    return count;
  };
  return go(0);
}

const std::vector<SparseRow>& transition(Basis from, Basis to, int d) {
  static std::mutex mutex;
  static std::map<std::tuple<Basis, Basis, int>, std::vector<SparseRow>> cache;
  static std::map<std::pair<Basis, int>, Dense> to_p_cache;
  static std::map<std::pair<Basis, int>, Dense> from_p_cache;

  std::lock_guard lock(mutex);
  const auto key = std::make_tuple(from, to, d);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  auto to_p = [&](Basis b) -> const Dense& {
    auto it = to_p_cache.find({b, d});
    if (it == to_p_cache.end()) it = to_p_cache.emplace(std::make_pair(b, d), to_power_sums(b, d)).first;
    return it->second;
  };
  auto from_p = [&](Basis b) -> const Dense& {
    auto it = from_p_cache.find({b, d});
    if (it == from_p_cache.end()) {
      Dense inv;
      if (b == Basis::m) {
        const auto& parts = enumerate_partitions(d);
        inv.assign(parts.size(), std::vector<Rational>(parts.size()));
        for (std::size_t i = 0; i < parts.size(); ++i) {
          for (std::size_t j = 0; j < parts.size(); ++j) inv[i][j] = power_to_monomial(parts[i], parts[j]);
        }
      } else {
        inv = invert(to_p(b));
      }
      it = from_p_cache.emplace(std::make_pair(b, d), std::move(inv)).first;
    }
    return it->second;
  };

  Dense m;
  if (from == to) {
    m = identity(enumerate_partitions(d).size());
  } else if (to == Basis::p) {
    m = to_p(from);
  } else if (from == Basis::p) {
    m = from_p(to);
  } else {
    m = multiply(to_p(from), from_p(to));
  }
  return cache.emplace(key, sparse(m)).first->second;
}

}  // namespace hlv
