#include <gtest/gtest.h>

#include "mullineux.hpp"
#include "oracles.hpp"

using namespace mullineux;

TEST(Partition, DropsTrailingZerosAndValidates) {
  EXPECT_EQ(Partition({3, 1, 0, 0}), Partition({3, 1}));
  EXPECT_THROW(Partition({1, 3}), error);
  EXPECT_THROW(Partition({2, -1}), error);
  EXPECT_THROW(Partition({2, 0, 1}), error);
  EXPECT_EQ(Partition::from_unsorted({1, 0, 3, 2}), Partition({3, 2, 1}));
}

TEST(Partition, Accessors) {
  const Partition p{4, 2, 2};
  EXPECT_EQ(p.rank(), 8);
  EXPECT_EQ(p.length(), 3u);
  EXPECT_EQ(p.part(1), 4);
  EXPECT_EQ(p.part(3), 2);
  EXPECT_EQ(p.part(4), 0);
  EXPECT_EQ(p.part(0), 0);
  EXPECT_TRUE(Partition{}.empty());
}

TEST(Partition, ErrorCodes) {
  try {
    Partition({1, 2});
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::invalid_input);
  }
  EXPECT_THROW(require_e(1), error);
}

TEST(Regularity, Examples) {
  EXPECT_TRUE(is_e_regular({3, 3}, 3));
  EXPECT_FALSE(is_e_regular({1, 1, 1}, 3));
  EXPECT_TRUE(is_e_regular({}, 2));
  EXPECT_FALSE(is_e_regular({2, 2}, 2));
  EXPECT_TRUE(is_e_regular({10, 8, 7, 5, 4, 4, 3, 2, 1, 1}, 4));
}

TEST(Conjugate, Examples) {
  EXPECT_EQ(conjugate({4, 2, 1}), Partition({3, 2, 1, 1}));
  EXPECT_EQ(conjugate({}), Partition{});
  EXPECT_EQ(conjugate({3}), Partition({1, 1, 1}));
}

TEST(Conjugate, MatchesCellTransposeAndIsInvolutive) {
  for (int n = 0; n <= 12; ++n)
    for (const auto& p : enumerate_partitions(n)) {
      EXPECT_EQ(conjugate(p), oracle::conjugate(p));
      EXPECT_EQ(conjugate(conjugate(p)), p);
    }
}

TEST(Hooks, MaxHookAgreesWithCellOracle) {
  for (int n = 0; n <= 10; ++n)
    for (const auto& p : enumerate_partitions(n)) EXPECT_EQ(max_hook_length(p), oracle::max_hook(p));
  EXPECT_TRUE(is_paper_e_core({2, 1}, 4));
  EXPECT_FALSE(is_paper_e_core({2, 1}, 3));
  EXPECT_TRUE(is_paper_e_core({}, 2));
}

TEST(Residues, NodeResidue) {
  const Multipartition mp{Partition{3}, Partition{3, 1}};
  const int s[] = {0, 1};
  EXPECT_EQ(node_residue(mp, {1, 3, 1}, s, 3), 2);
  EXPECT_EQ(node_residue(mp, {2, 1, 2}, s, 3), 0);
  EXPECT_EQ(node_residue(mp, {1, 3, 2}, s, 3), 0);
  EXPECT_THROW(node_residue(mp, {2, 2, 2}, s, 3), error);
  EXPECT_EQ(node_residue(Partition{2, 2}, {2, 1}, 0, 4), 3);
  EXPECT_EQ(mod(-1, 3), 2);
  EXPECT_EQ(mod(7, 3), 1);
}

TEST(Columns, AddAndRemove) {
  EXPECT_EQ(first_column_length({5, 2, 2}), 3);
  EXPECT_EQ(remove_first_column({5, 2, 1}), Partition({4, 1}));
  EXPECT_EQ(add_column({3, 1}, 4), Partition({4, 2, 1, 1}));
  EXPECT_EQ(add_column({}, 2), Partition({1, 1}));
  EXPECT_THROW(add_column({3, 1}, 1), error);
  for (int n = 0; n <= 8; ++n)
    for (const auto& p : enumerate_partitions(n))
      EXPECT_EQ(add_column(remove_first_column(p), first_column_length(p)), p);
}

TEST(Concat, SortsParts) { EXPECT_EQ(concat({3, 1}, {4, 2}), Partition({4, 3, 2, 1})); }

TEST(Enumerate, CountsAndOrder) {
  for (int n = 0; n <= 15; ++n) {
    const auto ps = enumerate_partitions(n);
    EXPECT_EQ(static_cast<long>(ps.size()), oracle::partition_count(n));
    EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end(), std::greater<>()));
    for (const auto& p : ps) EXPECT_EQ(p.rank(), n);
  }
  EXPECT_EQ(enumerate_e_regular(4, 2).size(), 2u);  // 4 and 3,1
}

TEST(Enumerate, Multipartitions) {
  // Bipartitions of n number sum over k of p(k) p(n-k).
  for (int n = 0; n <= 8; ++n) {
    long expect = 0;
    for (int k = 0; k <= n; ++k) expect += oracle::partition_count(k) * oracle::partition_count(n - k);
    const auto mps = enumerate_multipartitions(n, 2);
    EXPECT_EQ(static_cast<long>(mps.size()), expect);
    EXPECT_TRUE(std::is_sorted(mps.begin(), mps.end(), std::greater<>()));
    EXPECT_EQ(std::set<Multipartition>(mps.begin(), mps.end()).size(), mps.size());
  }
  EXPECT_EQ(enumerate_multipartitions(0, 3).size(), 1u);
  EXPECT_THROW(enumerate_multipartitions(2, 0), error);
}
