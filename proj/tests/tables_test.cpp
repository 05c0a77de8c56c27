#include <gtest/gtest.h>
#include <set>

#include <sstream>

#include "persym/errata.hpp"
#include "persym/recurrence.hpp"
#include "persym/tables.hpp"

using namespace persym;

TEST(k_expression, grammar) {
  EXPECT_EQ(k_expression::eval("2^(3k) - 7*2^(2k) + 7*2^(k+1) - 8", 3), 168);
  EXPECT_EQ(k_expression::eval("21", 9), 21);
  EXPECT_EQ(k_expression::eval("3*2^(2k+4) + 317*2^(k+8) + 13869056", 7), 25042944);
  EXPECT_EQ(k_expression::eval("2^35 - 3553*2^13", 1), pow2(35) - bigint(3553) * pow2(13));
  EXPECT_THROW(k_expression::eval("2^(", 3), shape_error);
}

TEST(tables, ids_are_unique_and_found) {
  std::set<std::string> ids;
  for (const auto& t : golden_tables()) EXPECT_TRUE(ids.insert(t.id).second) << t.id;
  EXPECT_NE(find_table("sss-s2k6"), nullptr);
  EXPECT_NE(find_table("ssm-s3m4k10"), nullptr);
  EXPECT_NE(find_table("s1-m1l3"), nullptr);
  EXPECT_EQ(find_table("nope"), nullptr);
}

TEST(tables, fixed_tables_evaluate) {
  const auto* t = find_table("sss-s2k6");
  ASSERT_NE(t, nullptr);
  auto d = gamma_recursive({2, 0, 0, 6});
  for (const auto& r : t->rows) EXPECT_EQ(k_expression::eval(r.value_expr(), 6), d.at(r.i)) << r.i;
}

TEST(tables, corrected_rows_carry_ids) {
  int amended = 0;
  for (const auto& t : golden_tables())
    for (const auto& r : t.rows)
      if (!r.corrected.empty()) {
        EXPECT_FALSE(r.erratum.empty());
        ++amended;
      }
  EXPECT_EQ(amended, 3);
}

TEST(errata, parse_and_fields) {
  std::istringstream in(
      "# comment\n"
      "id\tcitation\tquantity\ts\tm\tl\tk\tindex\tprinted\toracle\tcorrection\n"
      "E1\ts1/m=0,l=1\tgamma\t1\t0\t1\t4\t2\t954\t910\tnote\n");
  auto rows = parse_errata(in);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].id, "E1");
  EXPECT_EQ(rows[0].printed, 954);
  EXPECT_EQ(rows[0].oracle, 910);
  std::istringstream bad("E1\tx\tgamma\t1\n");
  EXPECT_THROW(parse_errata(bad), shape_error);
}

TEST(errata, shipped_file_loads) {
  auto rows = load_errata();
  EXPECT_GE(rows.size(), 13u);
  for (const auto& r : rows) EXPECT_NE(r.printed, r.oracle) << r.id;
  EXPECT_THROW(load_errata("/nonexistent/errata.tsv"), resource_error);
}
