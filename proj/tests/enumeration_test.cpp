#include <gtest/gtest.h>

#include "persym/enumeration.hpp"

using namespace persym;

namespace {

std::vector<bigint> v(std::initializer_list<long long> xs) {
  std::vector<bigint> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

run_options budget(int b, unsigned workers = 1) { return {b, workers}; }

}  // namespace

TEST(brute, triple_examples) {
  EXPECT_EQ(gamma_bruteforce({1, 0, 0, 1}).counts, v({1, 7}));
  EXPECT_EQ(gamma_bruteforce({2, 0, 0, 2}).counts, v({1, 21, 490}));
  auto d = gamma_bruteforce({1, 1, 1, 3});
  EXPECT_EQ(d.counts, v({1, 25, 366, 3704}));
  bigint total = 0;
  for (const auto& c : d.counts) total += c;
  EXPECT_EQ(total, pow2(12));
}

TEST(brute, double_examples) {
  EXPECT_EQ(gamma_bruteforce_double(1, 1, 1).counts, v({1, 3}));
  auto d = gamma_bruteforce_double(2, 5, 4);
  EXPECT_EQ(d.at(1), 9);
  EXPECT_EQ(d.at(2), 94);
}

TEST(brute, mixed_examples) {
  EXPECT_EQ(gamma_bruteforce_mixed({0, 0, 0, 1}).counts, v({1, 3}));
  EXPECT_EQ(gamma_bruteforce_mixed({2, 1, 3, 5}, budget(25)).counts, v({1, 129, 4566, 94440, 1714368, 31740928}));
  auto d = gamma_bruteforce_mixed({1, 0, 0, 2});
  bigint total = 0;
  for (const auto& c : d.counts) total += c;
  EXPECT_EQ(total, pow2(6));
}

TEST(brute, budget_enforced) {
  EXPECT_THROW(gamma_bruteforce({3, 0, 0, 5}, budget(12)), resource_error);
  EXPECT_THROW(gamma_bruteforce_double(3, 3, 9, budget(12)), resource_error);
  EXPECT_THROW(gamma_bruteforce_mixed({2, 1, 3, 5}, budget(12)), resource_error);
}

TEST(brute, deterministic_across_workers) {
  EXPECT_EQ(gamma_bruteforce({2, 1, 0, 4}, budget(24, 1)).counts, gamma_bruteforce({2, 1, 0, 4}, budget(24, 4)).counts);
}

TEST(kernel, equals_brute_on_small_shapes) {
  for (int s = 1; s <= 2; ++s)
    for (int m = 0; m <= 2; ++m)
      for (int l = 0; l <= 2; ++l)
        for (int k = 1; k <= 5; ++k) {
          TripleShape sh{s, m, l, k};
          if (sh.total_bits() > 18) continue;
          EXPECT_EQ(gamma_kernel(sh).counts, gamma_bruteforce(sh).counts) << s << m << l << k;
        }
  EXPECT_EQ(gamma_kernel_mixed({2, 1, 3, 5}).counts, gamma_bruteforce_mixed({2, 1, 3, 5}, budget(25)).counts);
}

TEST(kernel, reaches_wide_shapes) {
  auto d = gamma_kernel({3, 4, 0, 7}, budget(20));
  EXPECT_EQ(d.at(7), pow2(35) - bigint(3553) * pow2(13));
  EXPECT_THROW(gamma_kernel({3, 4, 0, 12}, budget(16)), resource_error);
}

TEST(profiles, totals_and_forbidden_pattern) {
  TripleShape sh{1, 1, 0, 4};
  auto jp = joint_profiles(sh);
  EXPECT_EQ(jp.total(), pow2(sh.total_bits()));
  for (int j = 0; j <= 2; ++j) EXPECT_EQ(jp.count_of({j, j + 1, j, j + 1, j, j + 1, j, j + 1}), 0);
  EXPECT_THROW(joint_profiles({1, 0, 0, 1}), shape_error);
}

TEST(solutions, small_counts) {
  EXPECT_EQ(solution_count_bruteforce(1, 2, 1, 0, 0), 11);
  EXPECT_EQ(solution_count_bruteforce(1, 1, 1, 0, 0), 9);
  EXPECT_EQ(solution_count_bruteforce(2, 2, 1, 0, 0), 142);
  EXPECT_THROW(solution_count_bruteforce(3, 4, 2, 1, 1, budget(20)), resource_error);
}

TEST(clmul, carry_less_product) {
  EXPECT_EQ(clmul(0b11, 0b11), 0b101u);
  EXPECT_EQ(clmul(0b101, 0b10), 0b1010u);
  EXPECT_EQ(clmul(0, 0b111), 0u);
}
