#include <gtest/gtest.h>

#include "mullineux.hpp"
#include "oracles.hpp"

using namespace mullineux;

namespace {

Bipartition lift(const Bipartition& bp, int e, int s, int k) {
  const auto out = psi({Multipartition{bp.first, bp.second}, {0, s}, e}, {0, s + k * e}).mp;
  return {out[0], out[1]};
}

class Sweep : public ::testing::TestWithParam<int> {};

}  // namespace

TEST_P(Sweep, MullineuxInvariants) {
  const int e = GetParam();
  for (int n = 0; n <= 12; ++n)
    for (const auto& lambda : enumerate_e_regular(n, e)) {
      const Partition x = xu(lambda, e);
      ASSERT_EQ(kleshchev_oracle(lambda, e), x) << text::format(lambda);
      ASSERT_EQ(x.rank(), n);
      ASSERT_TRUE(is_e_regular(x, e));
      ASSERT_EQ(xu(x, e), lambda);
      if (e == 2) {
        ASSERT_EQ(x, lambda);
      }
      if (is_paper_e_core(lambda, e)) {
        ASSERT_EQ(x, oracle::conjugate(lambda));
      }
      for (int s = 1; s < e; ++s) {
        const Partition c = mullineux_crystal(lambda, e, s);
        ASSERT_EQ(c, x) << text::format(lambda) << " s=" << s;
        ASSERT_EQ(mullineux_crystal(c, e, s), lambda);
      }
    }
}

TEST_P(Sweep, LiftIdentities) {
  const int e = GetParam();
  for (int n = 1; n <= 12; ++n)
    for (const auto& lambda : enumerate_e_regular(n, e)) {
      const auto [rest, r] = xu_strip(lambda, e);
      ASSERT_EQ(lift(theta_l2(lambda, e, e - 1), e, e - 1, minimal_very_dominant_k(0, e - 1, n, e)),
                (Bipartition{Partition{r}, rest}));
      ASSERT_EQ(lift(theta_l2(lambda, e, 1), e, 1, minimal_very_dominant_k(0, 1, n, e)),
                (Bipartition{xu(Partition{first_column_length(lambda)}, e), remove_first_column(lambda)}));
    }
}

TEST_P(Sweep, LiftComponents) {
  const int e = GetParam();
  for (int n = 0; n <= 12; ++n)
    for (const auto& lambda : enumerate_e_regular(n, e)) {
      const bool core = is_paper_e_core(lambda, e);
      for (int s = 1; s < e; ++s) {
        const int k = minimal_very_dominant_k(0, s, n, e);
        const auto up = lift(theta_l2(lambda, e, s), e, s, k);
        ASSERT_EQ(up.first.rank() + up.second.rank(), n);
        if (up.second.empty()) {
          ASSERT_TRUE(core) << text::format(lambda);
        }
        if (!core) {
          ASSERT_FALSE(up.first.empty()) << text::format(lambda);
        }
        ASSERT_EQ(lift(theta_l2(lambda, e, s), e, s, k + 1), up);
        ASSERT_TRUE(membership({Multipartition{up.first, up.second}, {0, s + k * e}, e}));
      }
      if (n <= 10) {
        const int k = minimal_very_dominant_k(0, 0, n, e);
        ASSERT_EQ(lift(theta_l2(lambda, e, 0), e, 0, k), (Bipartition{Partition{}, lambda}));
      }
    }
}

INSTANTIATE_TEST_SUITE_P(E, Sweep, ::testing::Values(2, 3, 4, 5, 6));

TEST(ImSharp, InvolutionOnChiImages) {
  for (int e = 2; e <= 4; ++e)
    for (int s = 0; s < e; ++s)
      for (int n = 0; n <= 9; ++n)
        for (const auto& mp : enumerate_phi(e, {0, s}, n)) {
          const Multisegment m = chi({mp, {0, s}, e});
          const Multisegment sharp = im_sharp(m, e);
          ASSERT_EQ(sharp.length(), m.length());
          ASSERT_TRUE(is_aperiodic(sharp, e));
          ASSERT_EQ(im_sharp(sharp, e), m) << text::format(m);
        }
}
