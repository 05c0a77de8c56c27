#include <gtest/gtest.h>

#include "persym/enumeration.hpp"
#include "persym/formulas.hpp"

using namespace persym;

TEST(low_rank, universal_values) {
  EXPECT_EQ(gamma_low(0), 1);
  EXPECT_EQ(gamma_low(1), 21);
  EXPECT_EQ(gamma_low(2), 378);
  EXPECT_THROW(gamma_low(-1), unsupported_error);
}

TEST(square, values) {
  EXPECT_EQ(gamma_square(2, 0, 0, 2), 490);
  EXPECT_EQ(gamma_square(2, 0, 0, 1), 63);
  EXPECT_EQ(gamma_square(3, 0, 0, 3), 32368);
  EXPECT_EQ(gamma_square(3, 0, 0, 3), gamma_bruteforce({3, 0, 0, 3}).at(3));
}

TEST(sss, s1_row) {
  for (int k = 3; k <= 9; ++k) {
    bigint want = pow2(3 * k) - 7 * pow2(2 * k) + 7 * pow2(k + 1) - 8;
    EXPECT_EQ(gamma_sss(1, k, 3).value, want) << k;
  }
}

TEST(ssm, printed_examples) {
  for (int k = 3; k <= 8; ++k) EXPECT_EQ(gamma_ssm(2, 2, k, 2).value, pow2(k + 1) + 362) << k;
  EXPECT_EQ(gamma_ssm(3, 4, 7, 7).value, pow2(35) - bigint(3553) * pow2(13));
  EXPECT_EQ(gamma_ssm(3, 1, 10, 3).value, 10416);
}

TEST(s1, printed_examples) {
  for (int k = 7; k <= 10; ++k) EXPECT_EQ(gamma_s1(2, 3, k, 1).value, pow2(k) + 17) << k;
  for (int k = 5; k <= 8; ++k)
    EXPECT_EQ(gamma_s1(1, 3, k, 4).value, 3 * pow2(2 * k + 1) + 105 * pow2(k + 3) + 60480) << k;
  for (int k = 3; k <= 8; ++k)
    for (int i = 0; i <= 3; ++i) EXPECT_EQ(gamma_s1(0, 0, k, i).value, gamma_sss(1, k, i).value);
}

TEST(closed_forms, agree_with_brute_force) {
  for (int s = 1; s <= 2; ++s)
    for (int m = 0; m <= 3; ++m)
      for (int l = 0; l <= 3; ++l)
        for (int k = 1; k <= 5; ++k) {
          TripleShape sh{s, m, l, k};
          if (sh.total_bits() > 18) continue;
          auto bf = gamma_bruteforce(sh);
          for (int i = 0; i <= sh.max_rank(); ++i)
            for (const auto& r : all_closed_forms({s, m, l, k, i}))
              EXPECT_EQ(r.value, bf.at(i)) << r.source << " s=" << s << " m=" << m << " l=" << l << " k=" << k;
        }
}

TEST(closed_forms, corrected_cases_carry_erratum_ids) {
  auto r = closed_form({1, 2, 0, 6}, 6);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->value, 2605056);
  EXPECT_FALSE(r->erratum.empty());
}

TEST(closed_forms, out_of_window) {
  EXPECT_FALSE(closed_form({1, 5, 1, 6}, 3).has_value());
  EXPECT_THROW(gamma_ssm(0, 1, 3, 1), shape_error);
}

TEST(a_coeff, recurrence_and_explicit) {
  EXPECT_EQ(a_coeff(1, 0), 1);
  EXPECT_EQ(a_coeff(1, 1), 1);
  EXPECT_EQ(a_coeff(2, 1), 3);
  for (int n = 1; n <= 10; ++n)
    for (int j = 0; j <= n; ++j) EXPECT_EQ(a_coeff(n, j), a_coeff_explicit(n, j));
  EXPECT_THROW(a_coeff(0, 0), shape_error);
}

TEST(a_coeff, combination_is_gaussian_product) {
  for (int n = 1; n <= 8; ++n)
    for (int i = 0; i <= n + 2; ++i) EXPECT_EQ(a_combination(n, i), gauss_ratio(n + 2, i, i));
}

TEST(unstructured, counts) {
  EXPECT_EQ(count_rank_unstructured(4, 4, 0), 1);
  EXPECT_EQ(count_rank_unstructured(2, 2, 2), 6);
  EXPECT_EQ(count_rank_unstructured(3, 2, 1), 21);
  EXPECT_EQ(count_rank_unstructured(3, 2, 3), 0);
}

TEST(mixed, from_doubles) {
  MixedShape ms{2, 1, 3, 5};
  auto dd = gamma_bruteforce_double(2, 5, 5);
  std::vector<bigint> got;
  for (int i = 0; i <= 5; ++i) got.push_back(gamma_mixed_from_doubles(ms, i, dd));
  EXPECT_EQ(got, (std::vector<bigint>{1, 129, 4566, 94440, 1714368, 31740928}));
  MixedShape ms0{0, 1, 1, 3};
  auto d0 = gamma_bruteforce_double(2, 3, 3);
  for (int i = 0; i <= 3; ++i) EXPECT_EQ(gamma_mixed_from_doubles(ms0, i, d0), d0.at(i));
  EXPECT_THROW(gamma_mixed_from_doubles(ms, 1, d0), shape_error);
}

TEST(append_row, matches_triple) {
  auto dd = gamma_bruteforce_double(1, 1, 1);
  EXPECT_EQ(gamma_append_row(dd, 1, 1), 7);
  EXPECT_EQ(gamma_append_row(dd, 1, 5), 0);
  auto d2 = gamma_bruteforce_double(2, 3, 4);
  auto t = gamma_bruteforce(shape_from_blocks(1, 2, 3, 4));
  for (int i = 0; i <= 4; ++i) EXPECT_EQ(gamma_append_row(d2, 4, i), t.at(i));
}

TEST(reductions, small_shapes) {
  int checked = 0;
  for (int s = 1; s <= 2; ++s)
    for (int m = 0; m <= 2; ++m)
      for (int k = 1; k <= 5; ++k) {
        TripleShape sh{s, m, 0, k};
        if (sh.total_bits() > 18) continue;
        auto lhs = gamma_bruteforce(sh);
        for (int i = 0; i <= sh.max_rank(); ++i)
          for (const auto& r : reductions(sh, i)) {
            auto rhs = gamma_bruteforce(r.target);
            EXPECT_EQ(lhs.at(i), rhs.at(r.i) << (4 * r.e)) << r.rule;
            ++checked;
          }
      }
  EXPECT_GT(checked, 5);
  auto r = reduction_map({1, 0, 0, 4}, 3);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->rule, "s1/shift-l");
}
