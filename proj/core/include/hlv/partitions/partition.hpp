#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "hlv/arith/poly.hpp"

namespace hlv {

struct CellStats {
  int row;  // 1-based
  int col;  // 1-based
  int arm;
  int leg;
  [[nodiscard]] int hook() const { return arm + leg + 1; }
};

// Integer partition stored as weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  // Sorts the parts and drops zeros; throws std::invalid_argument on negatives.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  [[nodiscard]] const std::vector<int>& parts() const { return parts_; }
  [[nodiscard]] int size() const { return size_; }
  [[nodiscard]] int length() const { return static_cast<int>(parts_.size()); }
  [[nodiscard]] bool empty() const { return parts_.empty(); }
  // 0-based part access; returns 0 past the end.
  [[nodiscard]] int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

  [[nodiscard]] Partition conjugate() const;
  // Arm and leg of the cell in 1-based row i, column j.
  [[nodiscard]] int arm(int i, int j) const;
  [[nodiscard]] int leg(int i, int j) const;
  [[nodiscard]] std::vector<CellStats> cells() const;
  [[nodiscard]] std::vector<int> hooks() const;
  // n(λ) = Σ (i-1) λ_i.
  [[nodiscard]] int n() const;
  // Centraliser order Π i^{m_i} m_i!.
  [[nodiscard]] Integer z() const;
  // m_i for i = 1..size (index 0 unused).
  [[nodiscard]] std::vector<int> multiplicities() const;
  [[nodiscard]] bool dominates(const Partition& other) const;
  [[nodiscard]] int parts_gcd() const;

  // "3,2,1"; the empty partition prints as "".
  [[nodiscard]] std::string to_string() const;
  static Partition parse(std::string_view text);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct PartitionStats {
  std::vector<CellStats> cells;
  int n_lambda;
  Integer z_lambda;
  Partition conjugate;
};

PartitionStats partition_stats(const Partition& lambda);

// H_λ(q) = Π_cells (1 - q^{hook}); 1 for the empty partition.
Poly hook_polynomial(const Partition& lambda);

// All partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
const std::vector<Partition>& enumerate_partitions(int n);

}  // namespace hlv
