#include "hlv/oracle/finite_field.hpp"

#include <map>
#include <optional>
#include <stdexcept>

#include "hlv/error.hpp"

namespace hlv {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Fixed irreducible moduli (monic, constant coefficient first).
const std::map<int, std::pair<int, std::vector<int>>>& extension_table() {
  static const std::map<int, std::pair<int, std::vector<int>>> table = {
      {4, {2, {1, 1, 1}}},           // x² + x + 1
      {8, {2, {1, 1, 0, 1}}},        // x³ + x + 1
      {9, {3, {1, 0, 1}}},           // x² + 1
      {16, {2, {1, 1, 0, 0, 1}}},    // x⁴ + x + 1
      {25, {5, {2, 1, 1}}},          // x² + x + 2
      {27, {3, {1, 2, 0, 1}}},       // x³ + 2x + 1
      {32, {2, {1, 0, 1, 0, 0, 1}}}, // x⁵ + x² + 1
      {49, {7, {1, 0, 1}}},          // x² + 1
  };
  return table;
}

std::vector<int> digits(int a, int p, int d) {
  std::vector<int> out(static_cast<std::size_t>(d));
  for (auto& x : out) {
    x = a % p;
    a /= p;
  }
  return out;
}

int undigits(const std::vector<int>& c, int p) {
  int a = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) a = a * p + *it;
  return a;
}

}  // namespace

SmallField::SmallField(int q) : q_(q) {
  if (q < 256 && is_prime(q)) {
    p_ = q;
    d_ = 1;
    modulus_ = {0, 1};
  } else if (auto it = extension_table().find(q); it != extension_table().end()) {
    p_ = it->second.first;
    modulus_ = it->second.second;
    d_ = static_cast<int>(modulus_.size()) - 1;
  } else {
    throw std::invalid_argument("unsupported field size " + std::to_string(q));
  }
  const auto n = static_cast<std::size_t>(q);
  add_.resize(n * n);
  mul_.resize(n * n);
  neg_.resize(n);
  inv_.assign(n, -1);
  for (int a = 0; a < q; ++a) {
    const auto da = digits(a, p_, d_);
    std::vector<int> na(da.size());
    for (std::size_t i = 0; i < da.size(); ++i) na[i] = (p_ - da[i]) % p_;
    neg_[static_cast<std::size_t>(a)] = undigits(na, p_);
    for (int b = 0; b < q; ++b) {
      const auto db = digits(b, p_, d_);
      std::vector<int> s(da.size());
      for (std::size_t i = 0; i < da.size(); ++i) s[i] = (da[i] + db[i]) % p_;
      add_[index(a, b)] = undigits(s, p_);
      // Schoolbook product, then reduction by the monic modulus.
      std::vector<int> prod(static_cast<std::size_t>(2 * d_ - 1), 0);
      for (int i = 0; i < d_; ++i) {
        for (int j = 0; j < d_; ++j) {
          prod[static_cast<std::size_t>(i + j)] = (prod[static_cast<std::size_t>(i + j)] + da[static_cast<std::size_t>(i)] * db[static_cast<std::size_t>(j)]) % p_;
        }
      }
      for (int top = 2 * d_ - 2; top >= d_; --top) {
        const int c = prod[static_cast<std::size_t>(top)];
        if (c == 0) continue;
        for (int i = 0; i <= d_; ++i) {
          auto& slot = prod[static_cast<std::size_t>(top - d_ + i)];
          slot = ((slot - c * modulus_[static_cast<std::size_t>(i)]) % p_ + p_) % p_;
        }
      }
      prod.resize(static_cast<std::size_t>(d_));
      mul_[index(a, b)] = undigits(prod, p_);
    }
  }
  for (int a = 1; a < q; ++a) {
    for (int b = 1; b < q; ++b) {
      if (mul(a, b) == 1) {
        inv_[static_cast<std::size_t>(a)] = b;
        break;
      }
    }
  }
}

SmallField::Elem SmallField::inv(Elem a) const {
  if (a == 0) throw MathError("division by zero");
  return inv_[static_cast<std::size_t>(a)];
}

SmallField::Elem SmallField::pow(Elem a, long e) const {
  if (e < 0) return pow(inv(a), -e);
  Elem r = 1;
  Elem b = a;
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

SmallField::Elem SmallField::from_int(long n) const { return static_cast<Elem>(((n % p_) + p_) % p_); }

std::vector<SmallField::Elem> SmallField::elements() const {
  std::vector<Elem> out(static_cast<std::size_t>(q_));
  for (int a = 0; a < q_; ++a) out[static_cast<std::size_t>(a)] = a;
  return out;
}

std::vector<SmallField::Elem> SmallField::nonzero() const {
  std::vector<Elem> out;
  for (int a = 1; a < q_; ++a) out.push_back(a);
  return out;
}

std::string SmallField::to_string(Elem a) const {
  if (d_ == 1) return std::to_string(a);
  const auto c = digits(a, p_, d_);
  std::string out;
  for (int i = d_ - 1; i >= 0; --i) {
    const int ci = c[static_cast<std::size_t>(i)];
    if (ci == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0 || ci != 1) out += std::to_string(ci);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

FieldMatrix FieldMatrix::identity(int n) {
  FieldMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FieldMatrix mat_mul(const SmallField& f, const FieldMatrix& x, const FieldMatrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix shapes do not match");
  FieldMatrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int k = 0; k < x.cols; ++k) {
      const auto xik = x.at(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) = f.add(r.at(i, j), f.mul(xik, y.at(k, j)));
    }
  }
  return r;
}

FieldMatrix mat_add(const SmallField& f, const FieldMatrix& x, const FieldMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matrix shapes do not match");
  FieldMatrix r(x.rows, x.cols);
  for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] = f.add(x.a[i], y.a[i]);
  return r;
}

FieldMatrix mat_scale(const SmallField& f, SmallField::Elem c, const FieldMatrix& x) {
  FieldMatrix r = x;
  for (auto& e : r.a) e = f.mul(c, e);
  return r;
}

namespace {

// Row-reduces in place; returns the pivot columns.
std::vector<int> row_reduce(const SmallField& f, FieldMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int piv = -1;
    for (int r = row; r < m.rows; ++r) {
      if (m.at(r, col) != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(row, j), m.at(piv, j));
    const auto inv = f.inv(m.at(row, col));
    for (int j = 0; j < m.cols; ++j) m.at(row, j) = f.mul(inv, m.at(row, j));
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      const auto c = f.neg(m.at(r, col));
      for (int j = 0; j < m.cols; ++j) m.at(r, j) = f.add(m.at(r, j), f.mul(c, m.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int mat_rank(const SmallField& f, FieldMatrix x) { return static_cast<int>(row_reduce(f, x).size()); }

std::optional<FieldMatrix> mat_inverse(const SmallField& f, const FieldMatrix& x) {
  if (x.rows != x.cols) throw std::invalid_argument("inverse of a non-square matrix");
  const int n = x.rows;
  FieldMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = x.at(i, j);
    aug.at(i, n + i) = 1;
  }
  const auto pivots = row_reduce(f, aug);
  if (static_cast<int>(pivots.size()) < n || pivots[static_cast<std::size_t>(n - 1)] >= n) return std::nullopt;
  FieldMatrix inv(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  }
  return inv;
}

std::vector<std::vector<SmallField::Elem>> null_space(const SmallField& f, FieldMatrix x) {
  const auto pivots = row_reduce(f, x);
  std::vector<bool> is_pivot(static_cast<std::size_t>(x.cols), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<SmallField::Elem>> basis;
  for (int free = 0; free < x.cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<SmallField::Elem> v(static_cast<std::size_t>(x.cols), 0);
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[static_cast<std::size_t>(pivots[r])] = f.neg(x.at(static_cast<int>(r), free));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Integer gl_order(int n, int q) {
  Integer qn;
  mpz_ui_pow_ui(qn.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(n));
  Integer order = 1;
  Integer qi = 1;
  for (int i = 0; i < n; ++i) {
    order *= qn - qi;
    qi *= q;
  }
  return order;
}

std::vector<FieldMatrix> enumerate_gl(const SmallField& f, int n, long max_codes) {
  double codes = 1;
  for (int i = 0; i < n * n; ++i) codes *= f.size();
  if (codes > static_cast<double>(max_codes)) throw BudgetError("instance too large");
  std::vector<FieldMatrix> out;
  FieldMatrix m(n, n);
  const auto total = static_cast<long>(codes);
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (auto& e : m.a) {
      e = static_cast<SmallField::Elem>(c % f.size());
      c /= f.size();
    }
    if (mat_rank(f, m) == n) out.push_back(m);
  }
  return out;
}

}  // namespace hlv
