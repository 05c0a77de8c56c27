#pragma once

#include <algorithm>
#include <cctype>
#include <climits>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"

namespace persym {

// Exact value of a short expression in k: sums of products of integers and
// powers 2^e, where e is an integer, k, or a parenthesised a*k+b.
// Example: "3*2^(2k+1) + 105*2^(k+3) - 60480".
class k_expression {
 public:
  static bigint eval(const std::string& text, int k) {
    k_expression p(text, k);
    bigint v = p.sum();
    p.skip();
    if (p.pos_ != p.s_.size()) p.fail("trailing input");
    return v;
  }

 private:
  k_expression(const std::string& s, int k) : s_(s), k_(k) {}

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) return ++pos_, true;
    return false;
  }
  [[noreturn]] void fail(const char* what) const {
    throw shape_error("k_expression: " + std::string(what) + " at " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("number expected");
    return std::stol(s_.substr(start, pos_ - start));
  }
  // a*k+b, a and b optional
  long linear() {
    long v = 0, sign = 1;
    if (eat('-')) sign = -1;
    for (;;) {
      skip();
      long term;
      if (pos_ < s_.size() && s_[pos_] == 'k') {
        ++pos_;
        term = k_;
      } else {
        term = integer();
        skip();
        if (pos_ < s_.size() && s_[pos_] == 'k') ++pos_, term *= k_;
      }
      v += sign * term;
      if (eat('+')) sign = 1;
      else if (eat('-')) sign = -1;
      else return v;
    }
  }
  long exponent() {
    skip();
    if (eat('(')) {
      long e = linear();
      if (!eat(')')) fail("')' expected");
      return e;
    }
    if (pos_ < s_.size() && s_[pos_] == 'k') return ++pos_, k_;
    return integer();
  }
  // product of integer factors with at most one power of two
  std::pair<bigint, long> term() {
    bigint c = 1;
    long e = 0;
    do {
      skip();
      if (pos_ + 1 < s_.size() && s_[pos_] == '2' && s_[pos_ + 1] == '^') {
        pos_ += 2;
        e += exponent();
      } else {
        c *= integer();
      }
    } while (eat('*'));
    return {c, e};
  }
  bigint sum() {
    dyadic_sum acc;
    bool neg = eat('-');
    for (;;) {
      auto [c, e] = term();
      acc.add(neg ? -c : c, e);
      if (eat('+')) neg = false;
      else if (eat('-')) neg = true;
      else break;
    }
    return acc.value();
  }

  std::string s_;
  int k_;
  std::size_t pos_ = 0;
};

struct table_row {
  int i = 0;
  std::string expr;
  int kmin = 1;
  int kmax = INT_MAX;
  std::string corrected;  // set when the printed row disagrees with the oracle
  std::string erratum;

  const std::string& value_expr() const { return corrected.empty() ? expr : corrected; }
};

// A printed table of Gamma values. k == 0 marks a table symbolic in k.
struct golden_table {
  std::string id;
  std::string title;
  bool mixed = false;
  int s = 1, m = 0, l = 0, n = 0;
  int k = 0;
  std::vector<table_row> rows;

  bool symbolic() const { return k == 0; }
  int kmin() const {
    int v = 1;
    for (const auto& r : rows) v = std::max(v, r.kmin);
    return v;
  }
};

namespace detail {

// Rows whose window is k >= i+1 except the top one.
inline std::vector<table_row> ladder(std::vector<std::string> exprs, int top_kmin) {
  std::vector<table_row> rows;
  const int n = static_cast<int>(exprs.size());
  for (int i = 0; i < n; ++i) rows.push_back({i, exprs[static_cast<std::size_t>(i)], i + 1 == n ? top_kmin : i + 1});
  return rows;
}

inline std::vector<table_row> fixed(std::vector<std::string> exprs) {
  std::vector<table_row> rows;
  for (int i = 0; i < static_cast<int>(exprs.size()); ++i) rows.push_back({i, exprs[static_cast<std::size_t>(i)], 1});
  return rows;
}

// Rows valid on one common window k >= kmin.
inline std::vector<table_row> flat(std::vector<std::string> exprs, int kmin) {
  std::vector<table_row> rows;
  for (int i = 0; i < static_cast<int>(exprs.size()); ++i)
    rows.push_back({i, exprs[static_cast<std::size_t>(i)], kmin});
  return rows;
}

}  // namespace detail

inline const std::vector<golden_table>& golden_tables() {
  using detail::fixed;
  using detail::flat;
  using detail::ladder;
  static const std::vector<golden_table> t = [] {
    std::vector<golden_table> v = {
      {"sss-s1", "[1,1,1] x k", false, 1, 0, 0, 0, 0,
       ladder({"1", "7*2^k - 7", "7*2^(2k) - 21*2^k + 14", "2^(3k) - 7*2^(2k) + 7*2^(k+1) - 2^3"}, 3)},
      {"sss-s2", "[2,2,2] x k", false, 2, 0, 0, 0, 0,
       ladder({"1", "21", "7*2^(k+1) + 266", "147*2^(k+1) + 1344", "7*2^(2k+2) + 651*2^(k+2) - 22624",
               "105*2^(2k+2) - 315*2^(k+5) + 53760", "2^(3k+3) - 7*2^(2k+6) + 7*2^(k+10) - 32768"},
              6)},
      {"sss-s2k6", "[2,2,2] x 6", false, 2, 0, 0, 0, 6,
       fixed({"1", "21", "1162", "20160", "258720", "1128960", "688128"})},
      {"sss-s3", "[3,3,3] x k", false, 3, 0, 0, 0, 0,
       ladder({"1", "21", "378", "7*2^(k+2) + 5936", "147*2^(k+2) + 84672", "147*9*2^(k+3) + 959616",
               "7*2^(2k+4) + 2121*2^(k+6) + 5863424", "105*2^(2k+4) + 2625*2^(k+9) - 92897280",
               "105*2^(2k+8) - 315*2^(k+14) + 220200960",
               "2^(3k+6) - 7*2^(2k+12) + 7*2^(k+19) - 134217728"},
              9)},
      {"sss-s3k5", "[3,3,3] x 5", false, 3, 0, 0, 0, 5, fixed({"1", "21", "378", "6832", "103488", "1986432"})},
      {"ss1-s3", "[3,4,4] x k", false, 3, 1, 0, 0, 0,
       ladder({"1", "21", "378", "2^(k+2) + 6320", "33*2^(k+2) + 100416", "630*2^(k+2) + 1524096",
               "1365*2^(k+5) + 21224448", "96*2^(2k) + 163008*2^(k+2) + 1029*2^18",
               "1696*2^(2k) + 2176512*2^(k+2) + 5723*2^18", "105*2^(2k+8) + 2625*2^(k+15) - 90720*2^18",
               "105*2^(2k+12) - 315*2^(k+20) + 215040*2^18", "2^(3k+8) - 7*2^(2k+16) + 7*2^(k+25) - 2^35"},
              11)},
      {"ssm-s2m2", "[2,4,4] x k", false, 2, 2, 0, 0, 0,
       ladder({"1", "21", "2^(k+1) + 362", "9*2^(k+1) + 6048", "348*2^k + 92640", "5712*2^k + 1295616",
               "3*2^(2k+4) + 1161*2^(k+6) + 15808512", "21*2^(2k+4) + 2163*2^(k+9) + 92897280",
               "424*2^(2k+4) + 167808*2^(k+6) - 1485832192", "105*2^(2k+10) - 315*2^(k+17) + 3523215360",
               "2^(3k+7) - 7*2^(2k+14) + 7*2^(k+22) - 2^31"},
              10)},
      {"ssm-s3m4k7", "[3,7,7] x 7", false, 3, 4, 0, 0, 7,
       fixed({"1", "21", "378", "6832", "108096", "1714560", "27276288", "2^35 - 3553*2^13"})},
      {"ssm-s3m4k10", "[3,7,7] x 10", false, 3, 4, 0, 0, 10,
       fixed({"1", "21", "378", "10416", "140352", "1994112", "29598720", "458661888", "109389*2^16",
              "213759*2^19", "2^44 - 14273*2^23"})},
      {"s1-m2l3", "[1,3,6] x k", false, 1, 2, 3, 0, 0,
       flat({"1", "2^k + 17", "9*2^k + 294", "55*2^(k+1) + 4360", "2^(2k+2) + 93*2^(k+3) + 70592",
             "3*2^(2k+2) + 189*2^(k+5) + 1128960", "3*2^(2k+4) + 317*2^(k+5) + 13869056",
             "11*2^(2k+6) + 429*2^(k+11) + 893*2^17", "21*2^(2k+8) + 693*2^(k+14) - 1541406720",
             "53*2^(2k+11) - 159*2^(k+18) + 53*2^26", "2^(3k+7) - 7*2^(2k+14) + 7*2^(k+22) - 2^31"},
            7)},
      {"s1-m2l2", "[1,3,5] x k", false, 1, 2, 2, 0, 0,
       flat({"1", "2^k + 17", "9*2^k + 294", "55*2^(k+1) + 4360", "2^(2k+2) + 93*2^(k+3) + 70592",
             "3*2^(2k+2) + 317*2^(k+5) + 866816", "11*2^(2k+4) + 429*2^(k+8) + 7315456",
             "21*2^(2k+6) + 693*2^(k+11) - 735*2^17", "53*2^(2k+9) - 159*2^(k+15) + 53*2^22",
             "2^(3k+4) - 7*2^(2k+12) + 7*2^(k+19) - 2^27"},
            6)},
      {"s1-m2l1", "[1,3,4] x k", false, 1, 2, 1, 0, 0,
       flat({"1", "2^k + 17", "9*2^k + 294", "55*2^(k+1) + 4360", "2^(2k+2) + 1256*2^k + 54208",
             "11*2^(2k+2) + 13728*2^k + 457216", "21*2^(2k+4) + 693*2^(k+8) - 735*2^13",
             "53*2^(2k+7) - 159*2^(k+12) + 53*2^18", "2^(3k+5) - 7*2^(2k+10) + 7*2^(k+16) - 2^23"},
            5)},
      {"s1-m2l0", "[1,3,3] x k", false, 1, 2, 0, 0, 0,
       flat({"1", "2^k + 17", "9*2^k + 294", "87*2^(k+1) + 3336", "3*2^(2k+2) + 213*2^(k+3) + 28608",
             "21*2^(2k+2) + 693*2^(k+5) - 735*2^9", "53*2^(2k+5) - 159*2^(k+9) + 53*2^14",
             "2^(3k+4) - 7*2^(2k+8) + 7*2^(k+13) - 2^19"},
            4)},
      {"s1-m1l3", "[1,2,5] x k", false, 1, 1, 3, 0, 0,
       flat({"1", "2^k + 17", "17*2^k + 230", "2^(2k+1) + 51*2^(k+1) + 3784", "3*2^(2k+1) + 105*2^(k+3) + 60480",
             "3*2^(2k+3) + 233*2^(k+6) + 433*2^10", "11*2^(2k+5) + 345*2^(k+9) - 367*2^14",
             "53*2^(2k+7) - 651264*2^k + 13893632", "2^(3k+5) - 7*2^(2k+10) + 7*2^(k+16) - 2^23"},
            5)},
      {"s1-m1l2", "[1,2,4] x k", false, 1, 1, 2, 0, 0,
       flat({"1", "2^k + 17", "17*2^k + 230", "2^(2k+1) + 51*2^(k+1) + 3784", "3*2^(2k+1) + 233*2^(k+3) + 433*2^6",
             "11*2^(2k+3) + 345*2^(k+6) - 367*2^10", "53*2^(2k+5) - 159*2^(k+9) + 3392*2^8",
             "2^(3k+4) - 7*2^(2k+8) + 7*2^(k+13) - 2^19"},
            4)},
      {"s1-m1l1", "[1,2,3] x k", false, 1, 1, 1, 0, 0,
       flat({"1", "2^k + 17", "17*2^k + 230", "2^(2k+1) + 115*2^(k+1) + 1736", "11*2^(2k+1) + 345*2^(k+3) - 367*2^6",
             "53*2^(2k+3) - 159*2^(k+6) + 3392*2^4", "2^(3k+3) - 7*2^(2k+6) + 7*2^(k+10) - 2^15"},
            3)},
      {"s1-m1l0", "[1,2,2] x k", false, 1, 1, 0, 0, 0,
       flat({"1", "2^k + 17", "33*2^k + 102", "3*2^(2k+1) + 171*2^(k+1) - 1464", "53*2^(2k+1) - 159*2^(k+3) + 3392",
             "2^(3k+2) - 7*2^(2k+4) + 7*2^(k+7) - 2^11"},
            2)},
      {"mixed-n2m1l3", "[(2),2,5] x k", true, 0, 1, 3, 2, 0,
       flat({"1", "3*2^k + 33", "2^(2k) + 83*2^k + 886", "33*2^(2k) + 978*2^k + 29352",
             "2^(3k+1) + 182*2^(2k) + 16408*2^k + 937408", "3*2^(3k+1) + 189*2^(2k+3) + 8191*2^(k+6) + 12911*2^10",
             "3*2^(3k+3) + 36672*2^(2k) + 11271168*2^k - 399015936",
             "11*2^(3k+5) + 1022464*2^(2k) - 100679680*2^k + 2163212288",
             "117*2^(3k+7) - 3354624*2^(2k) + 214695936*2^k - 3925868544",
             "2^(4k+5) - 480*2^(3k+5) + 2240*2^(2k+10) - 1920*2^(k+16) + 2^31"},
            5)},
      {"mixed-n2m1l3k5", "[(2),2,5] x 5", true, 0, 1, 3, 2, 5,
       fixed({"1", "129", "4566", "94440", "1714368", "31740928"})},
    };
    auto amend = [&v](const char* id, int i, const char* fixed_expr, const char* erratum) {
      for (auto& tb : v)
        if (tb.id == id) {
          tb.rows[static_cast<std::size_t>(i)].corrected = fixed_expr;
          tb.rows[static_cast<std::size_t>(i)].erratum = erratum;
        }
    };
    amend("ss1-s3", 7, "96*2^(2k) + 163008*2^(k+2) + 15069*2^14", "E11");
    amend("s1-m2l3", 6, "3*2^(2k+4) + 317*2^(k+8) + 13869056", "E12");
    amend("s1-m2l2", 9, "2^(3k+6) - 7*2^(2k+12) + 7*2^(k+19) - 2^27", "E13");
    return v;
  }();
  return t;
}

inline const golden_table* find_table(const std::string& id) {
  for (const auto& t : golden_tables())
    if (t.id == id) return &t;
  return nullptr;
}

}  // namespace persym
