#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hlv/arith/poly.hpp"

namespace hlv {

// F_q for q = p^d, elements encoded as 0..q-1 by the base-p digits of their
// residue polynomial modulo a fixed irreducible of degree d. Addition and
// multiplication go through precomputed tables.
class SmallField {
 public:
  using Elem = int;

  // Supported: primes below 256 and 4, 8, 9, 16, 25, 27, 32, 49.
  explicit SmallField(int q);

  [[nodiscard]] int size() const { return q_; }
  [[nodiscard]] int characteristic() const { return p_; }
  [[nodiscard]] int degree() const { return d_; }
  // Coefficients (constant first) of the defining irreducible; {0, 1} for prime fields.
  [[nodiscard]] const std::vector<int>& modulus() const { return modulus_; }

  [[nodiscard]] Elem add(Elem a, Elem b) const { return add_[index(a, b)]; }
  [[nodiscard]] Elem mul(Elem a, Elem b) const { return mul_[index(a, b)]; }
  [[nodiscard]] Elem neg(Elem a) const { return neg_[static_cast<std::size_t>(a)]; }
  [[nodiscard]] Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  // Throws MathError "division by zero" for a = 0.
  [[nodiscard]] Elem inv(Elem a) const;
  [[nodiscard]] Elem pow(Elem a, long e) const;
  [[nodiscard]] Elem frobenius(Elem a) const { return pow(a, p_); }
  // Image of the integer n under Z -> F_q.
  [[nodiscard]] Elem from_int(long n) const;

  [[nodiscard]] std::vector<Elem> elements() const;
  [[nodiscard]] std::vector<Elem> nonzero() const;
  [[nodiscard]] std::string to_string(Elem a) const;

 private:
  [[nodiscard]] std::size_t index(Elem a, Elem b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + static_cast<std::size_t>(b);
  }

  int q_;
  int p_;
  int d_;
  std::vector<int> modulus_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
};

// Dense matrix over a SmallField.
struct FieldMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<SmallField::Elem> a;  // row-major

  FieldMatrix() = default;
  FieldMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r * c), 0) {}
  static FieldMatrix identity(int n);

  [[nodiscard]] SmallField::Elem at(int i, int j) const { return a[static_cast<std::size_t>(i * cols + j)]; }
  SmallField::Elem& at(int i, int j) { return a[static_cast<std::size_t>(i * cols + j)]; }

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;
  friend auto operator<=>(const FieldMatrix&, const FieldMatrix&) = default;
};

FieldMatrix mat_mul(const SmallField& f, const FieldMatrix& x, const FieldMatrix& y);
FieldMatrix mat_add(const SmallField& f, const FieldMatrix& x, const FieldMatrix& y);
FieldMatrix mat_scale(const SmallField& f, SmallField::Elem c, const FieldMatrix& x);
int mat_rank(const SmallField& f, FieldMatrix x);
// Inverse of a square matrix; nullopt when singular.
std::optional<FieldMatrix> mat_inverse(const SmallField& f, const FieldMatrix& x);
// Basis of the right null space {v : x v = 0}.
std::vector<std::vector<SmallField::Elem>> null_space(const SmallField& f, FieldMatrix x);

// |GL_n(F_q)| = Π_{i<n} (q^n - q^i).
Integer gl_order(int n, int q);

// All invertible n x n matrices, in increasing order of their base-q code
// (entry (0,0) least significant). Throws BudgetError "instance too large"
// when q^(n²) exceeds max_codes.
std::vector<FieldMatrix> enumerate_gl(const SmallField& f, int n, long max_codes = 20'000'000);

}  // namespace hlv
