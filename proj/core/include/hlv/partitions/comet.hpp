#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hlv/partitions/multipartition.hpp"

namespace hlv {

// Dimension vector of a comet-shaped quiver: central dimension v0 and k legs
// with weakly decreasing dimensions moving away from the centre.
struct CometDimensionVector {
  int g = 0;
  int v0 = 1;
  std::vector<std::vector<int>> legs;

  // "2; 1 / 1 / 1". A leg may be empty ("2; ").
  [[nodiscard]] std::string to_string() const;
  static CometDimensionVector parse(std::string_view text, int g);

  friend bool operator==(const CometDimensionVector&, const CometDimensionVector&) = default;
};

// Strictly decreasing subsequence rule. Trailing zeros in legs are ignored.
// Throws std::invalid_argument "invalid dimension vector" on bad input.
MultiPartition dimvec_to_multipartition(const CometDimensionVector& v);

// Canonical minimal dimension vector: legs are the nonzero tail sums.
CometDimensionVector multipartition_to_dimvec(const MultiPartition& mu, int g);

}  // namespace hlv
