#include <gtest/gtest.h>

#include "persym/cli.hpp"

using namespace persym;

namespace {

cli::shape_args shape(int s, int m, int l, int k) {
  cli::shape_args a;
  a.s = s;
  a.m = m;
  a.l = l;
  a.k = k;
  return a;
}

}  // namespace

TEST(cli_gamma, closed_s2k6) {
  auto r = cli::cmd_gamma(shape(2, 0, 0, 6), "closed", {});
  EXPECT_EQ(r.counts, (std::vector<std::string>{"1", "21", "1162", "20160", "258720", "1128960", "688128"}));
  EXPECT_EQ(r.provenance.size(), 7u);
}

TEST(cli_gamma, brute_s1k1) {
  auto r = cli::cmd_gamma(shape(1, 0, 0, 1), "brute", {});
  EXPECT_EQ(r.counts, (std::vector<std::string>{"1", "7"}));
}

TEST(cli_gamma, recurrence_matches_brute) {
  auto a = shape(2, 1, 1, 4);
  EXPECT_EQ(cli::cmd_gamma(a, "recurrence", {20, 1}).counts, cli::cmd_gamma(a, "brute", {20, 1}).counts);
  EXPECT_EQ(cli::cmd_gamma(a, "auto", {20, 1}).counts, cli::cmd_gamma(a, "kernel", {20, 1}).counts);
}

TEST(cli_gamma, mixed_shape) {
  auto a = shape(1, 1, 3, 5);
  a.n = 2;
  auto r = cli::cmd_gamma(a, "auto", {20, 1});
  EXPECT_EQ(r.counts.back(), "31740928");
  auto j = cli::to_json(r);
  EXPECT_EQ(j["shape"]["n"], 2);
}

TEST(cli_gamma, unsupported) {
  EXPECT_THROW(cli::cmd_gamma(shape(1, 5, 1, 6), "closed", {}), unsupported_error);
  EXPECT_THROW(cli::cmd_gamma(shape(3, 0, 0, 9), "brute", {20, 1}), resource_error);
}

TEST(cli_gamma, errata_in_provenance) {
  auto r = cli::cmd_gamma(shape(1, 2, 0, 6), "closed", {}, PERSYM_ERRATA_PATH);
  bool seen = false;
  for (const auto& p : r.provenance) seen |= p.find("erratum E4") != std::string::npos;
  EXPECT_TRUE(seen);
}

TEST(cli_json, round_trip_is_byte_identical) {
  auto r = cli::cmd_gamma(shape(2, 1, 0, 5), "auto", {});
  const std::string once = cli::to_json(r).dump(2);
  const std::string twice = cli::to_json(cli::record_from_json(cli::json::parse(once))).dump(2);
  EXPECT_EQ(once, twice);
  EXPECT_EQ(once, cli::to_json(cli::cmd_gamma(shape(2, 1, 0, 5), "auto", {})).dump(2));
}

TEST(cli_tsv, header_and_rows) {
  auto r = cli::cmd_gamma(shape(1, 0, 0, 2), "brute", {});
  auto tsv = cli::to_tsv(r);
  EXPECT_EQ(tsv.rfind("s\tm\tl\tk\tn\tmethod\ti\tcount\n", 0), 0u);
  EXPECT_NE(tsv.find("\t2\t42\n"), std::string::npos);
}

TEST(cli_count, examples) {
  auto c = cli::cmd_count(shape(1, 0, 0, 2), 1, "auto", {});
  EXPECT_EQ(c.value, 11);
  auto r335 = cli::cmd_count(shape(3, 0, 0, 5), 3, "auto", {}, PERSYM_ERRATA_PATH);
  EXPECT_EQ(factored_string(r335.value), "27843*2^13");
  bool seen = false;
  for (const auto& p : r335.provenance) seen |= p.find("E10") != std::string::npos;
  EXPECT_TRUE(seen);
  auto mixed = shape(1, 1, 3, 5);
  mixed.n = 2;
  EXPECT_EQ(factored_string(cli::cmd_count(mixed, 3, "auto", {}).value), "13281*2^20");
}

TEST(cli_count, brute_and_extrapolated) {
  auto a = shape(1, 0, 1, 2);
  auto viadist = cli::cmd_count(a, 2, "auto", {});
  auto direct = cli::cmd_count(a, 2, "brute", {});
  EXPECT_TRUE(viadist.extrapolated);
  EXPECT_EQ(viadist.value, direct.value);
  EXPECT_NE(cli::to_text(viadist).find("extrapolated"), std::string::npos);
}

TEST(cli_table, json_and_tsv) {
  const auto* t = find_table("s1-m1l3");
  ASSERT_NE(t, nullptr);
  auto j = cli::table_json(*t, 6);
  EXPECT_EQ(j["shape"]["k"], 6);
  auto tsv = cli::table_tsv(*find_table("sss-s2k6"), std::nullopt);
  EXPECT_NE(tsv.find("688128"), std::string::npos);
  EXPECT_NE(cli::table_ids().find("ssm-s3m4k10"), std::string::npos);
}
