#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hlv/partitions/partition.hpp"

namespace hlv {

// k-tuple of partitions of a common size n >= 1.
class MultiPartition {
 public:
  MultiPartition() = default;
  // Throws std::invalid_argument if the components are empty or of unequal size.
  explicit MultiPartition(std::vector<Partition> components);

  [[nodiscard]] const std::vector<Partition>& components() const { return components_; }
  [[nodiscard]] const Partition& operator[](std::size_t i) const { return components_[i]; }
  [[nodiscard]] int k() const { return static_cast<int>(components_.size()); }
  [[nodiscard]] int n() const { return components_.empty() ? 0 : components_.front().size(); }

  // Components sorted in decreasing order (ℍ_μ does not depend on their order).
  [[nodiscard]] MultiPartition sorted() const;

  // "2,1|1,1,1".
  [[nodiscard]] std::string to_string() const;
  static MultiPartition parse(std::string_view text);

  friend bool operator==(const MultiPartition&, const MultiPartition&) = default;
  friend auto operator<=>(const MultiPartition&, const MultiPartition&) = default;

 private:
  std::vector<Partition> components_;
};

// d_μ = n²(2g-2+k) - Σ (μ^i_j)² + 2.
long dimension_d_mu(const MultiPartition& mu, int g);

// True iff the gcd of all parts of all components is 1.
bool is_indivisible(const MultiPartition& mu);

// All k-tuples of partitions of n, in reverse lexicographic order per component.
std::vector<MultiPartition> enumerate_multipartitions(int n, int k);
// One representative (components weakly decreasing) per unordered tuple.
std::vector<MultiPartition> enumerate_multipartitions_unordered(int n, int k);

}  // namespace hlv
