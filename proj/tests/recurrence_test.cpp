#include <gtest/gtest.h>

#include "persym/enumeration.hpp"
#include "persym/recurrence.hpp"

using namespace persym;

TEST(delta, small_values) {
  EXPECT_EQ(delta_remainder(2, 0, 0, 3, 0), 1);
  EXPECT_EQ(delta_remainder(2, 0, 0, 4, 1), 7);
  EXPECT_EQ(delta_remainder(2, 0, 0, 1, 1), 49);
  EXPECT_THROW(delta_remainder(1, 0, 0, 3, 1), unsupported_error);
}

TEST(delta, printed_variant_differs_at_i3) {
  recurrence_options printed;
  printed.delta = delta_variant::printed;
  EXPECT_EQ(delta_remainder(2, 0, 0, 3, 3, printed), -64);
  EXPECT_EQ(delta_remainder(2, 0, 0, 3, 3), 356);
}

TEST(recursion, s2_table) {
  auto d = gamma_recursive({2, 0, 0, 6});
  EXPECT_EQ(d.counts, (std::vector<bigint>{1, 21, 1162, 20160, 258720, 1128960, 688128}));
  EXPECT_EQ(gamma_recursive({2, 0, 0, 5}).at(1), 21);
}

TEST(recursion, matches_brute_with_l_positive) {
  for (TripleShape sh : {TripleShape{2, 1, 1, 4}, TripleShape{2, 0, 1, 4}, TripleShape{2, 0, 2, 3},
                         TripleShape{3, 0, 1, 3}})
    EXPECT_EQ(gamma_recursive(sh).counts, gamma_bruteforce(sh, {20, 1}).counts);
}

TEST(recursion, printed_remainder_breaks_the_recursion) {
  recurrence_options printed;
  printed.delta = delta_variant::printed;
  bool differs = false;
  try {
    differs = gamma_recursive({2, 0, 0, 3}, printed).counts != gamma_bruteforce({2, 0, 0, 3}).counts;
  } catch (const consistency_error&) {
    differs = true;
  }
  EXPECT_TRUE(differs);
}

TEST(recursion, budget_frontier) {
  recurrence_options tight;
  tight.run.bit_budget = 8;
  recurrence_engine eng(tight);
  EXPECT_THROW(eng.gamma({2, 4, 1, 6}, 5), resource_error);
  EXPECT_FALSE(eng.frontier().empty());
}

TEST(moments, brute_and_perturbed) {
  auto d = gamma_bruteforce({1, 1, 0, 3});
  EXPECT_TRUE(moment_check(d).pass);
  EXPECT_TRUE(moment_check(gamma_recursive({2, 0, 0, 6})).pass);
  d.counts[1] += 1;
  auto r = moment_check(d);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.total_residual, 1);
}
