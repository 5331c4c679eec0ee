#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hlv/partitions/comet.hpp"

namespace hlv {
namespace {

std::vector<int> sorted_hooks(const Partition& p) {
  auto h = p.hooks();
  std::sort(h.begin(), h.end());
  return h;
}

TEST(Partition, StatsExamples) {
  const auto s = partition_stats(Partition{2, 1});
  EXPECT_EQ(sorted_hooks(Partition{2, 1}), (std::vector<int>{1, 1, 3}));
  EXPECT_EQ(s.n_lambda, 1);
  EXPECT_EQ(s.z_lambda, 2);
  EXPECT_EQ(s.conjugate, (Partition{2, 1}));

  const auto t = partition_stats(Partition{1, 1, 1});
  EXPECT_EQ(t.n_lambda, 3);
  EXPECT_EQ(t.z_lambda, 6);
  EXPECT_EQ(t.conjugate, Partition{3});

  for (int n = 1; n <= 6; ++n) {
    const Partition row{n};
    EXPECT_EQ(row.n(), 0);
    std::vector<int> expected(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) expected[static_cast<std::size_t>(i)] = i + 1;
    EXPECT_EQ(sorted_hooks(row), expected);
  }
}

TEST(Partition, HookPolynomial) {
  const Poly q = Poly::variable(Var::q);
  const Poly one(1);
  EXPECT_EQ(hook_polynomial(Partition{1}), one - q);
  EXPECT_EQ(hook_polynomial(Partition{2, 1}), (one - q.pow(3)) * (one - q) * (one - q));
  EXPECT_EQ(hook_polynomial(Partition{2}), (one - q * q) * (one - q));
  EXPECT_EQ(hook_polynomial(Partition{}), one);
}

TEST(Partition, Enumeration) {
  EXPECT_EQ(enumerate_partitions(3), (std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}}));
  EXPECT_EQ(enumerate_partitions(0), (std::vector<Partition>{Partition{}}));
  const std::vector<int> counts = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n < 9; ++n) {
    const auto& ps = enumerate_partitions(n);
    EXPECT_EQ(ps.size(), static_cast<std::size_t>(counts[static_cast<std::size_t>(n)]));
    EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end(), std::greater<>()));
    EXPECT_EQ(std::set<Partition>(ps.begin(), ps.end()).size(), ps.size());
  }
  EXPECT_EQ(enumerate_multipartitions(2, 2).size(), 4u);
  EXPECT_EQ(enumerate_multipartitions_unordered(2, 2).size(), 3u);
  EXPECT_EQ(enumerate_multipartitions_unordered(3, 3).size(), 10u);
}

TEST(Partition, CellIdentities) {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& p : enumerate_partitions(n)) {
      const Partition c = p.conjugate();
      EXPECT_EQ(c.conjugate(), p);
      EXPECT_EQ(sorted_hooks(p), sorted_hooks(c));
      int hook_sum = 0;
      for (int h : p.hooks()) hook_sum += h;
      EXPECT_EQ(p.n() + c.n() + p.size(), hook_sum);
      for (const auto& cell : p.cells()) {
        EXPECT_EQ(cell.arm, p.arm(cell.row, cell.col));
        EXPECT_EQ(cell.leg, p.leg(cell.row, cell.col));
      }
    }
  }
}

TEST(Partition, ParseAndPrint) {
  EXPECT_EQ(Partition::parse("3,2,1"), (Partition{3, 2, 1}));
  EXPECT_EQ(Partition::parse(" 2, 2 "), (Partition{2, 2}));
  EXPECT_THROW(Partition::parse("1,2"), std::invalid_argument);
  EXPECT_THROW(Partition::parse("1,,1"), std::invalid_argument);
  EXPECT_THROW(Partition::parse("a"), std::invalid_argument);
  const auto mu = MultiPartition::parse("3,2,1|2,2,1,1");
  EXPECT_EQ(mu.k(), 2);
  EXPECT_EQ(mu.n(), 6);
  EXPECT_EQ(mu.to_string(), "3,2,1|2,2,1,1");
  EXPECT_THROW(MultiPartition::parse("2|1"), std::invalid_argument);
}

TEST(MultiPartition, Dimension) {
  EXPECT_EQ(dimension_d_mu(MultiPartition::parse("1"), 1), 2);
  EXPECT_EQ(dimension_d_mu(MultiPartition::parse("1,1|1,1|1,1"), 0), 0);
  EXPECT_EQ(dimension_d_mu(MultiPartition::parse("1,1"), 1), 4);
  for (int k = 1; k <= 4; ++k) {
    for (int g = 0; g <= 4; ++g) {
      EXPECT_EQ(dimension_d_mu(MultiPartition(std::vector<Partition>(static_cast<std::size_t>(k), Partition{1})), g), 2 * g);
    }
  }
}

TEST(MultiPartition, Indivisible) {
  EXPECT_TRUE(is_indivisible(MultiPartition::parse("1,1")));
  EXPECT_FALSE(is_indivisible(MultiPartition::parse("2")));
  EXPECT_TRUE(is_indivisible(MultiPartition::parse("2,2|3,1")));
}

TEST(Comet, DimvecToMultipartition) {
  EXPECT_EQ(dimvec_to_multipartition(CometDimensionVector::parse("2; 1", 0)), MultiPartition::parse("1,1"));
  EXPECT_EQ(dimvec_to_multipartition(CometDimensionVector::parse("2; 2", 0)), MultiPartition::parse("2"));
  EXPECT_EQ(dimvec_to_multipartition(CometDimensionVector::parse("3; 2 1", 0)), MultiPartition::parse("1,1,1"));
  EXPECT_EQ(dimvec_to_multipartition(CometDimensionVector::parse("2; 2 1", 0)), MultiPartition::parse("1,1"));
  EXPECT_EQ(dimvec_to_multipartition(CometDimensionVector::parse("2; 1 0 0", 0)), MultiPartition::parse("1,1"));
  EXPECT_EQ(dimvec_to_multipartition(CometDimensionVector::parse("2", 1)), MultiPartition::parse("2"));
  EXPECT_THROW(dimvec_to_multipartition(CometDimensionVector::parse("2; 3", 0)), std::invalid_argument);
  EXPECT_THROW(dimvec_to_multipartition(CometDimensionVector::parse("3; 1 2", 0)), std::invalid_argument);
}

TEST(Comet, MultipartitionToDimvec) {
  auto v = multipartition_to_dimvec(MultiPartition::parse("1,1"), 1);
  EXPECT_EQ(v.v0, 2);
  EXPECT_EQ(v.legs, (std::vector<std::vector<int>>{{1}}));
  v = multipartition_to_dimvec(MultiPartition::parse("2"), 1);
  EXPECT_EQ(v.legs, (std::vector<std::vector<int>>{{}}));
  v = multipartition_to_dimvec(MultiPartition::parse("1,1|1,1|1,1"), 0);
  EXPECT_EQ(v.legs, (std::vector<std::vector<int>>{{1}, {1}, {1}}));
  EXPECT_EQ(v.to_string(), "2; 1 / 1 / 1");
  EXPECT_EQ(CometDimensionVector::parse(v.to_string(), 0), v);
}

TEST(Comet, RoundTripAllMultipartitions) {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= 2; ++k) {
      for (const auto& mu : enumerate_multipartitions(n, k)) {
        EXPECT_EQ(dimvec_to_multipartition(multipartition_to_dimvec(mu, 0)), mu) << mu.to_string();
      }
    }
  }
}

}  // namespace
}  // namespace hlv
