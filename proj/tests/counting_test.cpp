#include <gtest/gtest.h>

#include <random>

#include "persym/counting.hpp"

using namespace persym;

namespace {

bitseq random_bits(std::mt19937_64& rng, int n) {
  bitseq b(static_cast<std::size_t>(n));
  for (auto& x : b) x = static_cast<std::uint8_t>(rng() & 1u);
  return b;
}

}  // namespace

TEST(exp_sum, zero_and_rank_one) {
  TripleShape sh{1, 0, 0, 1};
  CoefficientTriple zero{{0}, {0}, {0}};
  EXPECT_EQ(exp_sum_direct(zero, sh), 16);
  CoefficientTriple one{{1}, {0}, {0}};
  EXPECT_EQ(exp_sum_direct(one, sh), 8);
}

TEST(exp_sum, random_points_follow_rank) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    TripleShape sh{1 + static_cast<int>(rng() % 2), static_cast<int>(rng() % 2), static_cast<int>(rng() % 2), 1 + static_cast<int>(rng() % 3)};
    CoefficientTriple p{random_bits(rng, sh.alpha_bits()), random_bits(rng, sh.beta_bits()), random_bits(rng, sh.gamma_bits())};
    const int r = static_cast<int>(rank(stack_triple(p, sh)));
    EXPECT_EQ(exp_sum_direct(p, sh), exp_sum_from_rank(sh, r));
  }
}

TEST(exp_sum, mixed_zero_and_full_rank) {
  MixedShape ms{2, 1, 3, 5};
  EXPECT_EQ(exp_sum_mixed(BitMatrix(2, 5), bitseq(6, 0), bitseq(9, 0), ms), exp_sum_mixed_from_rank(ms, 0));
  EXPECT_EQ(exp_sum_mixed_from_rank(ms, 0), pow2(5 + 2 + 3 + 2 + 2));
  // full rank: unit rows e0, e1 on top, the blocks supply e2..e4
  auto g = BitMatrix::from_rows({{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}});
  bitseq t{0, 0, 0, 0, 1, 0};
  bitseq eta{0, 0, 0, 0, 0, 0, 1, 0, 0};
  auto m = stack_mixed(g, t, eta, ms);
  ASSERT_EQ(rank(m), 5u);
  EXPECT_EQ(exp_sum_mixed(g, t, eta, ms), pow2(9));
}

TEST(power_sum, reproduces_counts) {
  for (int k = 1; k <= 2; ++k) {
    TripleShape sh{1, 0, 0, k};
    auto d = gamma_bruteforce(sh);
    for (int q = 1; q <= 3; ++q) {
      EXPECT_EQ(power_sum_direct(sh, q, {20, 1}), r_q(q, d));
      EXPECT_EQ(r_q(q, d), solution_count_bruteforce(q, k, 1, 0, 0, {24, 1}));
    }
  }
}

TEST(r_q, q1_identity) {
  for (TripleShape sh : {TripleShape{1, 0, 0, 2}, TripleShape{2, 0, 0, 3}, TripleShape{1, 2, 0, 3}}) {
    auto d = gamma_bruteforce(sh);
    EXPECT_EQ(r_q(1, d), pow2(sh.total_rows()) + pow2(sh.k) - 1);
  }
}

TEST(r_q, three_three_five) {
  auto d = gamma_recursive({3, 0, 0, 5});
  EXPECT_EQ(r_q(3, d), bigint(3563904) * pow2(6));
  EXPECT_EQ(factored_string(r_q(3, d)), "27843*2^13");
}

TEST(r_q, l_positive_needs_extrapolation) {
  auto d = gamma_bruteforce({1, 0, 1, 2});
  EXPECT_THROW(r_q(2, d), unsupported_error);
  auto e = r_q_extrapolated(2, d);
  EXPECT_TRUE(e.extrapolated);
  EXPECT_EQ(e.value, solution_count_bruteforce(2, 2, 1, 0, 1));
}

TEST(r_q_mixed, example) {
  auto d = gamma_kernel_mixed({2, 1, 3, 5});
  EXPECT_EQ(r_q_mixed(3, d), bigint(13281) * pow2(20));
  EXPECT_THROW(r_q_mixed(0, d), shape_error);
  EXPECT_THROW(r_q_mixed(1, gamma_bruteforce({1, 0, 0, 1})), shape_error);
}

TEST(r_q_mixed, four_to_the_q_times_enumeration) {
  MixedShape ms{1, 0, 1, 2};
  auto d = gamma_bruteforce_mixed(ms);
  for (int q = 1; q <= 2; ++q) EXPECT_EQ(r_q_mixed(q, d), solution_count_bruteforce_mixed(q, ms) * pow2(2L * q));
}

TEST(invertible, fractions) {
  for (int s = 1; s <= 3; ++s)
    for (int m = 2; m <= 4; ++m) EXPECT_EQ(invertible_fraction(s, m).str(), "21/64");
  auto f = invertible_fraction(1, 0, {22, 1});
  EXPECT_EQ(f.source, "brute");
  EXPECT_EQ(f.str(), "21/64");
  EXPECT_EQ(gamma_bruteforce({1, 0, 0, 3}).at(3), 168);
  EXPECT_EQ(invertible_fraction(1, 1, {22, 1}).str(), "21/64");
}
