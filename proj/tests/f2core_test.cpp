#include <gtest/gtest.h>

#include "persym/f2core.hpp"

using namespace persym;

namespace {

bitseq bits(std::initializer_list<int> v) {
  bitseq b;
  for (int x : v) b.push_back(static_cast<std::uint8_t>(x));
  return b;
}

}  // namespace

TEST(persymmetric, identity_case) {
  auto m = persymmetric_matrix(bits({1, 0, 1}), 2, 2);
  EXPECT_EQ(m, BitMatrix::identity(2) ^ BitMatrix::from_rows({{0, 0}, {0, 0}}));
  EXPECT_EQ(rank(m), 2u);
}

TEST(persymmetric, zero_and_constant) {
  auto z = persymmetric_matrix(bitseq(6, 0), 3, 4);
  EXPECT_EQ(rank(z), 0u);
  auto c = persymmetric_matrix(bits({1, 1, 1, 1}), 2, 3);
  EXPECT_EQ(c, BitMatrix::from_rows({{1, 1, 1}, {1, 1, 1}}));
  EXPECT_EQ(rank(c), 1u);
}

TEST(persymmetric, entries_depend_on_index_sum) {
  auto m = persymmetric_matrix(bits({0, 1, 1, 0, 1}), 3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j + 1 < 3; ++j)
      if (i + 1 < 3) EXPECT_EQ(m.get(i, j + 1), m.get(i + 1, j));
}

TEST(persymmetric, rejects_wrong_length) {
  EXPECT_THROW(persymmetric_matrix(bits({1, 0}), 2, 2), shape_error);
  EXPECT_THROW(persymmetric_matrix(bits({1}), 0, 2), shape_error);
}

TEST(rank, small_cases) {
  EXPECT_EQ(rank(BitMatrix(3, 5)), 0u);
  EXPECT_EQ(rank(BitMatrix::identity(7)), 7u);
  EXPECT_EQ(rank(BitMatrix::from_rows({{1, 1}, {1, 1}})), 1u);
  EXPECT_EQ(rank(BitMatrix::identity(70)), 70u);
}

TEST(rank, transpose_invariant) {
  auto m = BitMatrix::from_rows({{1, 0, 1, 1}, {0, 1, 1, 0}, {1, 1, 0, 1}});
  EXPECT_EQ(rank(m), rank(m.transpose()));
  EXPECT_EQ(rank(m), 2u);
}

TEST(truncate, columns) {
  auto t = truncate_columns(BitMatrix::identity(3), 2);
  EXPECT_EQ(t.cols(), 2u);
  EXPECT_EQ(rank(t), 2u);
  auto m = BitMatrix::from_rows({{1, 0, 1}, {0, 1, 1}});
  EXPECT_EQ(truncate_columns(m, 3), m);
  EXPECT_THROW(truncate_columns(m, 4), shape_error);
}

TEST(stack_triple, small_examples) {
  TripleShape sh{1, 0, 0, 2};
  CoefficientTriple c{bits({1, 0}), bits({0, 1}), bits({1, 1})};
  auto m = stack_triple(c, sh);
  EXPECT_EQ(m, BitMatrix::from_rows({{1, 0}, {0, 1}, {1, 1}}));
  EXPECT_EQ(rank(m), 2u);

  TripleShape sh2{2, 0, 0, 2};
  CoefficientTriple c2{bits({1, 0, 0}), bits({0, 1, 0}), bits({0, 0, 1})};
  auto m2 = stack_triple(c2, sh2);
  EXPECT_EQ(m2.rows(), 6u);
  EXPECT_EQ(rank(m2), 2u);

  CoefficientTriple zero{bitseq(3, 0), bitseq(4, 0), bitseq(5, 0)};
  EXPECT_EQ(rank(stack_triple(zero, {2, 1, 1, 2})), 0u);
}

TEST(stack_triple, prefix_property) {
  // dropping the last column equals stacking the shortened coefficients
  TripleShape sh{2, 1, 1, 4};
  CoefficientTriple c{bits({1, 0, 1, 1, 0}), bits({0, 1, 1, 0, 1, 1}), bits({1, 1, 0, 0, 1, 0, 1})};
  TripleShape sh1 = sh;
  sh1.k = 3;
  auto cut = [](bitseq b) {
    b.pop_back();
    return b;
  };
  CoefficientTriple c1{cut(c.alpha), cut(c.beta), cut(c.gamma)};
  EXPECT_EQ(truncate_columns(stack_triple(c, sh), 3), stack_triple(c1, sh1));
}

TEST(stack_triple, rejects_bad_lengths) {
  CoefficientTriple c{bits({1}), bits({1}), bits({1, 1})};
  EXPECT_THROW(stack_triple(c, {1, 0, 0, 2}), shape_error);
  EXPECT_THROW(TripleShape({0, 0, 0, 1}).validate(), shape_error);
}

TEST(stack_mixed, degenerate_and_example) {
  MixedShape ms0{0, 1, 1, 3};
  auto d = stack_mixed(BitMatrix(0, 3), bits({1, 0, 1, 1}), bits({0, 1, 1, 0, 1}), ms0);
  EXPECT_EQ(d, persymmetric_matrix(bits({1, 0, 1, 1}), 2, 3).vstack(persymmetric_matrix(bits({0, 1, 1, 0, 1}), 3, 3)));

  MixedShape zero{2, 1, 1, 3};
  EXPECT_EQ(rank(stack_mixed(BitMatrix(2, 3), bitseq(4, 0), bitseq(5, 0), zero)), 0u);

  // n=2, m=1, l=3, k=5: a 2 + 2 + 5 = 9 row matrix
  MixedShape ms{2, 1, 3, 5};
  auto g = BitMatrix::from_rows({{1, 0, 0, 1, 0}, {0, 1, 1, 0, 1}});
  auto m = stack_mixed(g, bits({1, 0, 1, 1, 0, 1}), bits({0, 0, 1, 0, 1, 1, 0, 0, 1}), ms);
  EXPECT_EQ(m.rows(), 9u);
  EXPECT_EQ(m.cols(), 5u);
  EXPECT_EQ(m.get(2, 1), m.get(3, 0));
  EXPECT_EQ(m.get(8, 4), true);
  EXPECT_THROW(stack_mixed(g, bits({1}), bits({1}), ms), shape_error);
}

TEST(shape, block_helpers) {
  auto sh = shape_from_blocks(5, 2, 3, 4);
  EXPECT_EQ(sh, (TripleShape{2, 1, 2, 4}));
  EXPECT_EQ(sh.total_rows(), 10);
  EXPECT_EQ(sh.total_bits(), 4 + 1 + 4 + 2 + 4 + 4);
  MixedShape ms{2, 1, 3, 5};
  EXPECT_EQ(ms.total_bits(), 10 + 6 + 9);
}
