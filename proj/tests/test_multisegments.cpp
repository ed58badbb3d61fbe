#include <gtest/gtest.h>

#include "mullineux.hpp"
#include "oracles.hpp"

using namespace mullineux;

namespace {

Multipartition bp(Partition a, Partition b) { return Multipartition{std::move(a), std::move(b)}; }

const Multisegment kRunning{{0, 3}, {1, 3}, {0, 1}};

}  // namespace

TEST(Segment, TailAndOrder) {
  EXPECT_EQ((Segment{1, 3}).tail(3), 0);
  EXPECT_EQ((Segment{2, 6}).tail(3), 1);
  const Multisegment m{{0, 1}, {2, 6}, {1, 2}, {0, 2}};
  EXPECT_EQ(m.segments(), (std::vector<Segment>{{2, 6}, {0, 2}, {1, 2}, {0, 1}}));
  EXPECT_EQ(m.length(), 11);
  EXPECT_THROW(Multisegment({{0, 0}}), error);
}

TEST(Aperiodic, Examples) {
  const Multisegment yes{{0, 4}, {0, 1}, {1, 1}, {1, 2}, {2, 2}};
  const Multisegment no{{0, 4}, {0, 1}, {0, 2}, {1, 2}, {2, 2}};
  EXPECT_EQ(yes.length(), 10);
  EXPECT_TRUE(is_aperiodic(yes, 3));
  EXPECT_FALSE(is_aperiodic(no, 3));
  EXPECT_TRUE(is_aperiodic({}, 3));
}

TEST(Chi, Examples) {
  EXPECT_EQ(chi({bp({3}, {3, 1}), {0, 1}, 3}), kRunning);
  EXPECT_EQ(chi({bp({2, 1}, {}), {0, 1}, 3}), (Multisegment{{0, 2}, {2, 1}}));
  EXPECT_TRUE(chi({bp({}, {}), {0, 1}, 3}).empty());
}

TEST(Chi, NonFundamentalChargeGoesThroughPsi) {
  const ChargedMultipartition x{bp({1}, {2}), {0, 1}, 3};
  const auto y = psi(x, {0, 4});
  EXPECT_EQ(chi(y), chi(x));
}

TEST(ChiInverse, Examples) {
  EXPECT_EQ(chi_inverse(kRunning, {0, 1}, 3), bp({3}, {3, 1}));
  EXPECT_TRUE(chi_inverse({}, {0, 2}, 4) == bp({}, {}));
  const Partition lambda{8, 8, 6, 6, 4, 3, 3, 2, 1, 1};
  const auto th = theta(lambda, 4, {0, 2});
  EXPECT_EQ(chi_inverse(chi({th, {0, 2}, 4}), {0, 2}, 4), bp({8, 8, 3, 2, 1, 1}, {6, 6, 4, 3}));
  try {
    chi_inverse(kRunning, {0, 0}, 3);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::not_admissible);
  }
  EXPECT_THROW(chi_inverse(kRunning, {0, 4}, 3), error);
}

TEST(ChiInverse, MatchesExhaustiveOracle) {
  for (int e = 2; e <= 4; ++e)
    for (int s = 0; s < e; ++s)
      for (int n = 0; n <= 6; ++n)
        for (const auto& mp : enumerate_multipartitions(n, 2)) {
          const Multisegment m = segments_of_rows(mp, {0, s}, e);
          const auto pre = oracle::chi_preimages(m, {0, s}, e);
          ASSERT_LE(pre.size(), 1u);
          const auto got = try_chi_inverse(m, {0, s}, e);
          ASSERT_EQ(got.has_value(), !pre.empty());
          if (got) {
            EXPECT_EQ(*got, pre.front());
          }
        }
}

TEST(ChiInverse, RoundTripOnLabels) {
  for (int e = 2; e <= 5; ++e)
    for (int s = 0; s < e; ++s)
      for (int n = 0; n <= 10; ++n)
        for (const auto& mp : enumerate_phi(e, {0, s}, n)) {
          const ChargedMultipartition x{mp, {0, s}, e};
          const auto m = chi(x);
          ASSERT_EQ(chi_inverse(m, {0, s}, e), mp);
          EXPECT_TRUE(is_aperiodic(m, e));
          EXPECT_EQ(m.length(), n);
        }
}

TEST(Chi, StableUnderTauBetweenFundamentalCharges) {
  // (1,1) -> (1,4): tau keeps both charges fundamental only at level one.
  for (int e = 2; e <= 4; ++e)
    for (int n = 0; n <= 8; ++n)
      for (const auto& p : enumerate_e_regular(n, e)) {
        const ChargedMultipartition x{Multipartition{p}, {0}, e};
        EXPECT_EQ(chi(psi_tau(x)), chi(x));
      }
  for (int n = 0; n <= 6; ++n)
    for (const auto& mp : enumerate_phi(3, {0, 0}, n)) {
      const ChargedMultipartition x{mp, {0, 0}, 3};
      const auto y = psi_tau(x);  // charge (0, 3), not fundamental: chi goes through psi
      EXPECT_EQ(chi(y), chi(x));
    }
}

TEST(Admissible, Examples) {
  EXPECT_TRUE(is_admissible(kRunning, {0, 1}, 3));
  EXPECT_FALSE(is_admissible(kRunning, {0, 0}, 3));
  EXPECT_TRUE(is_admissible(kRunning, {0, 4}, 3));
  const Multisegment rows = chi(Partition{4, 2, 1}, 0, 3);
  for (const Multicharge& t : {Multicharge{0}, Multicharge{0, 1}, Multicharge{0, 2, 2}, Multicharge{0, 0}})
    EXPECT_TRUE(is_admissible(rows, t, 3));
  EXPECT_TRUE(is_admissible(rows, {0, 1}, 3, {0}));
  EXPECT_FALSE(is_admissible(rows, {1, 2}, 3, {0}));
}

TEST(Admissible, ContainmentMatchesSearch) {
  // Row multisegments of e-regular partitions are admissible exactly at charges containing 0.
  for (int e = 2; e <= 4; ++e)
    for (int n = 1; n <= 7; ++n)
      for (const auto& p : enumerate_e_regular(n, e)) {
        const Multisegment rows = chi(p, 0, e);
        for (int a = 0; a < e; ++a)
          for (int b = a; b < e; ++b) {
            const Multicharge t{a, b};
            if (contains({0}, t, e)) {
              EXPECT_TRUE(is_admissible(rows, t, e));
            }
          }
      }
}
