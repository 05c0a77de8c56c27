#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "enumeration.hpp"
#include "errors.hpp"
#include "f2core.hpp"

namespace persym {

struct FormulaResult {
  bigint value;
  std::string source;    // case tag, unique per case
  std::string validity;  // the (i, k) window the case claims
  std::string erratum;   // empty unless a corrected expression was used
};

// A point (s, m, l, k, i) of a triple family.
struct gamma_point {
  int s = 1, m = 0, l = 0, k = 1, i = 0;
};

struct formula_case {
  const char* source;
  const char* validity;
  bool (*applies)(const gamma_point&);
  bigint (*eval)(const gamma_point&);
  const char* erratum = nullptr;  // id in the errata list when the printed expression was corrected
};

inline bigint gamma_low(int i) {
  if (i < 0) throw unsupported_error("gamma_low: negative rank");
  if (i == 0) return 1;
  return dyadic_sum{{105, 4 * i - 6}, {-21, 3 * i - 5}}.value();
}

inline bigint gamma_square(int s, int m, int l, int i) {
  if (i < 1 || i > s + 1) throw unsupported_error("gamma_square: need 1 <= i <= s+1");
  return dyadic_sum{{1, 3 * s + 2 * m + l + 3 * i - 3}, {-7, 4 * i - 6}, {3, 3 * i - 5}}.value();
}

namespace detail {

using P = const gamma_point&;

// Cases valid for every (s, m, l).
inline const std::vector<formula_case>& general_cases() {
  static const std::vector<formula_case> t = {
      {"any/i=0", "i=0, k>=1", [](P p) { return p.i == 0; }, [](P) { return bigint(1); }},
      {"any/low", "1<=i<=s-1, k>=i+1", [](P p) { return p.i >= 1 && p.i <= p.s - 1 && p.k >= p.i + 1; },
       [](P p) { return gamma_low(p.i); }},
      {"any/square", "1<=i<=s+1, k=i", [](P p) { return p.i >= 1 && p.i <= p.s + 1 && p.k == p.i; },
       [](P p) { return gamma_square(p.s, p.m, p.l, p.i); }},
      {"any/i=s,k=s+1", "i=s, k=s+1", [](P p) { return p.i == p.s && p.k == p.s + 1; },
       [](P p) { return gamma_low(p.s); }},
  };
  return t;
}

// [s,s,s].
inline const std::vector<formula_case>& sss_cases() {
  static const std::vector<formula_case> t = {
      {"sss/i=0", "i=0", [](P p) { return p.i == 0; }, [](P) { return bigint(1); }},
      {"sss/low", "1<=i<=s-1, k>=i+1", [](P p) { return p.i >= 1 && p.i <= p.s - 1 && p.k >= p.i + 1; },
       [](P p) { return gamma_low(p.i); }},
      {"sss/i=s", "i=s, k>=s+1", [](P p) { return p.i == p.s && p.k >= p.s + 1; },
       [](P p) {
         int s = p.s, k = p.k;
         return dyadic_sum{{7, k + s - 1}, {-7, 2 * s}, {105, 4 * s - 6}, {-21, 3 * s - 5}}.value();
       }},
      {"sss/i=s+j", "1<=j<=s-1, k>=s+j+1",
       [](P p) {
         int j = p.i - p.s;
         return j >= 1 && j <= p.s - 1 && p.k >= p.s + j + 1;
       },
       [](P p) {
         int s = p.s, k = p.k, j = p.i - p.s;
         return dyadic_sum{{735, k + s + 4 * j - 7}, {-147, k + s + 3 * j - 6}, {105, 4 * s + 4 * j - 6},
                           {-21, 3 * s + 3 * j - 5}, {-21 * 155, 2 * s + 5 * j - 8}, {21 * 35, 2 * s + 4 * j - 7}}
             .value();
       }},
      {"sss/i=2s", "i=2s, k>=2s+1", [](P p) { return p.i == 2 * p.s && p.k >= 2 * p.s + 1; },
       [](P p) {
         int s = p.s, k = p.k;
         return dyadic_sum{{7, 2 * k + 2 * s - 2}, {21 * 35, k + 5 * s - 7}, {-21 * 39, k + 4 * s - 6},
                           {7 * 15, 8 * s - 6}, {-7 * 465, 7 * s - 8}, {7 * 349, 6 * s - 7}}
             .value();
       }},
      {"sss/i=2s+1+j", "0<=j<=s-2, k>=2s+2+j",
       [](P p) {
         int j = p.i - 2 * p.s - 1;
         return j >= 0 && j <= p.s - 2 && p.k >= 2 * p.s + 2 + j;
       },
       [](P p) {
         int s = p.s, k = p.k, j = p.i - 2 * s - 1;
         return dyadic_sum{{105, 2 * k + 2 * s + 4 * j - 2}, {735, k + 5 * s + 4 * j - 3},
                           {-105 * 31, k + 4 * s + 5 * j - 3}, {105, 8 * s + 4 * j - 2},
                           {-105 * 31, 7 * s + 5 * j - 3}, {105 * 93, 6 * s + 6 * j - 3}}
             .value();
       }},
      {"sss/i=3s", "i=3s, k>=3s", [](P p) { return p.i == 3 * p.s && p.k >= 3 * p.s; },
       [](P p) {
         int s = p.s, k = p.k;
         return dyadic_sum{{1, 3 * k + 3 * s - 3}, {-7, 2 * k + 6 * s - 6}, {7, k + 9 * s - 8}, {-1, 12 * s - 9}}
             .value();
       }},
      {"sss/k=i,i<=s+1", "1<=i<=s+1, k=i", [](P p) { return p.k == p.i && p.i >= 1 && p.i <= p.s + 1; },
       [](P p) {
         int s = p.s, i = p.i;
         return dyadic_sum{{1, 3 * s + 3 * i - 3}, {-7, 4 * i - 6}, {3, 3 * i - 5}}.value();
       }},
      {"sss/k=i,i=s+j", "1<=j<=s+1, k=i",
       [](P p) {
         int j = p.i - p.s;
         return p.k == p.i && j >= 1 && j <= p.s + 1;
       },
       [](P p) {
         int s = p.s, j = p.i - p.s;
         return dyadic_sum{{1, 6 * s + 3 * j - 3}, {7, 2 * s + 5 * j - 8}, {-7, 2 * s + 4 * j - 7},
                           {-7, 4 * s + 4 * j - 6}, {3, 3 * s + 3 * j - 5}}
             .value();
       }},
      {"sss/k=i,i=2s+1+j", "0<=j<=s-1, k=i",
       [](P p) {
         int j = p.i - 2 * p.s - 1;
         return p.k == p.i && j >= 0 && j <= p.s - 1;
       },
       [](P p) {
         int s = p.s, j = p.i - 2 * s - 1;
         return dyadic_sum{{1, 9 * s + 3 * j}, {-7, 8 * s + 4 * j - 2}, {7, 7 * s + 5 * j - 3},
                           {-1, 6 * s + 6 * j - 3}}
             .value();
       }},
  };
  return t;
}

// [s,s+1,s+1].
inline const std::vector<formula_case>& ssm1_cases() {
  static const std::vector<formula_case> t = {
      {"ss1/i=0", "i=0", [](P p) { return p.i == 0; }, [](P) { return bigint(1); }},
      {"ss1/low", "1<=i<=s-1, k>=i+1", [](P p) { return p.i >= 1 && p.i <= p.s - 1 && p.k >= p.i + 1; },
       [](P p) { return gamma_low(p.i); }},
      {"ss1/i=s", "i=s, k>=s+1", [](P p) { return p.i == p.s && p.k >= p.s + 1; },
       [](P p) {
         int s = p.s, k = p.k;
         return dyadic_sum{{1, k + s - 1}, {-1, 2 * s}, {105, 4 * s - 6}, {-21, 3 * s - 5}}.value();
       }},
      {"ss1/i=s+1", "i=s+1, k>=s+2", [](P p) { return p.i == p.s + 1 && p.k >= p.s + 2; },
       [](P p) {
         int s = p.s, k = p.k;
         return dyadic_sum{{33, k + s - 1}, {105, 4 * s - 2}, {-21, 3 * s - 2}, {-69, 2 * s}}.value();
       }},
      {"ss1/i=s+2", "i=s+2, 2<=s, k>=s+3", [](P p) { return p.s >= 2 && p.i == p.s + 2 && p.k >= p.s + 3; },
       [](P p) {
         int s = p.s, k = p.k;
         return dyadic_sum{{630, k + s - 1}, {105, 4 * s + 2}, {-21, 3 * s + 1}, {-21 * 65, 2 * s + 1}}.value();
       }},
      {"ss1/i=s+3", "i=s+3, 3<=s, k>=s+4", [](P p) { return p.s >= 3 && p.i == p.s + 3 && p.k >= p.s + 4; },
       [](P p) {
         int s = p.s, k = p.k;
         return dyadic_sum{{1365, k + s + 2}, {105, 4 * s + 6}, {-21, 3 * s + 4}, {-21 * 285, 2 * s + 4}}.value();
       }},
      {"ss1/i=s+4", "i=s+4, 4<=s, k>=s+5", [](P p) { return p.s >= 4 && p.i == p.s + 4 && p.k >= p.s + 5; },
       [](P p) {
         int s = p.s, k = p.k;
         return dyadic_sum{{2835, k + s + 5}, {105, 4 * s + 10}, {-21, 3 * s + 7}, {-21 * 595, 2 * s + 8}}.value();
       }},
      {"ss1/i=s+j", "2<=j<=s, k>=s+j+1",
       [](P p) {
         int j = p.i - p.s;
         return j >= 2 && j <= p.s && p.k >= p.s + j + 1;
       },
       [](P p) {
         int s = p.s, k = p.k, j = p.i - s;
         return dyadic_sum{{735, k + s + 4 * j - 9}, {-105, k + s + 3 * j - 7}, {105, 4 * s + 4 * j - 6},
                           {-21, 3 * s + 3 * j - 5}, {-21 * 155, 2 * s + 5 * j - 10}, {21 * 25, 2 * s + 4 * j - 8}}
             .value();
       }},
      {"ss1/i=2s+1", "i=2s+1, k>=2s+2", [](P p) { return p.i == 2 * p.s + 1 && p.k >= 2 * p.s + 2; },
       [](P p) {
         int s = p.s, k = p.k;
         return dyadic_sum{{3, 2 * s - 1 + 2 * k},       {-3, 2 * s - 1 + 4 * s + 4},
                           {735, 5 * s - 5 + k},         {-735, 5 * s - 5 + 2 * s + 2},
                           {-393, 4 * s - 4 + k},        {393, 4 * s - 4 + 2 * s + 2},
                           {105, 8 * s - 2},             {21, 6 * s - 4},
                           {-315, 7 * s - 5}}
             .value();
       }},
      {"ss1/i=2s+2", "i=2s+2, k>=2s+3", [](P p) { return p.i == 2 * p.s + 2 && p.k >= 2 * p.s + 3; },
       [](P p) {
         int s = p.s, k = p.k;
         return dyadic_sum{{53, 2 * s - 1 + 2 * k},    {-53, 2 * s - 1 + 4 * s + 6},
                           {735, 5 * s - 1 + k},      {-735, 5 * s - 1 + 2 * s + 3},
                           {-1629, 4 * s - 1 + k},    {1629, 4 * s - 1 + 2 * s + 3},
                           {105, 8 * s + 2},          {63, 6 * s},
                           {-315, 7 * s}}
             .value();
       }},
      {"ss1/i=2s+3+j", "0<=j<=s-2, k>=2s+4+j",
       [](P p) {
         int j = p.i - 2 * p.s - 3;
         return j >= 0 && j <= p.s - 2 && p.k >= 2 * p.s + 4 + j;
       },
       [](P p) {
         int s = p.s, k = p.k, j = p.i - 2 * s - 3;
         return dyadic_sum{{105, 2 * k + 2 * s + 4 * j + 2}, {735, k + 5 * s + 4 * j + 3},
                           {-105 * 31, k + 4 * s + 5 * j + 3}, {105, 8 * s + 4 * j + 6},
                           {-105 * 31, 7 * s + 5 * j + 5}, {105 * 93, 6 * s + 6 * j + 5}}
             .value();
       }},
      {"ss1/i=3s+2", "i=3s+2, k>=3s+2", [](P p) { return p.i == 3 * p.s + 2 && p.k >= 3 * p.s + 2; },
       [](P p) {
         int s = p.s, k = p.k;
         return dyadic_sum{{1, 3 * k + 3 * s - 1}, {-7, 2 * k + 6 * s - 2}, {7, k + 9 * s - 2}, {-1, 12 * s - 1}}
             .value();
       }},
      {"ss1/k=i,i<=s+1", "1<=i<=s+1, k=i", [](P p) { return p.k == p.i && p.i >= 1 && p.i <= p.s + 1; },
       [](P p) {
         int s = p.s, i = p.i;
         return dyadic_sum{{1, 3 * s + 3 * i - 1}, {-7, 4 * i - 6}, {3, 3 * i - 5}}.value();
       }},
      {"ss1/k=i,i=s+j", "2<=j<=s+3, k=i",
       [](P p) {
         int j = p.i - p.s;
         return p.k == p.i && j >= 2 && j <= p.s + 3;
       },
       [](P p) {
         int s = p.s, j = p.i - s;
         return dyadic_sum{{1, 6 * s + 3 * j - 1}, {-7, 4 * s + 4 * j - 6}, {3, 3 * s + 3 * j - 5},
                           {7, 2 * s + 5 * j - 10}, {-5, 2 * s + 4 * j - 8}}
             .value();
       }},
      {"ss1/k=i,i=2s+1", "i=2s+1, k=i", [](P p) { return p.k == p.i && p.i == 2 * p.s + 1; },
       [](P p) {
         int s = p.s;
         return dyadic_sum{{1, 9 * s + 2}, {7, 7 * s - 5}, {-7, 8 * s - 2}, {7, 6 * s - 4}}.value();
       }},
      {"ss1/k=i,i=2s+2", "i=2s+2, k=i", [](P p) { return p.k == p.i && p.i == 2 * p.s + 2; },
       [](P p) {
         int s = p.s;
         return dyadic_sum{{1, 9 * s + 5}, {7, 7 * s}, {-7, 8 * s + 2}, {1, 6 * s}}.value();
       }},
      {"ss1/k=i,i=2s+3", "i=2s+3, k=i", [](P p) { return p.k == p.i && p.i == 2 * p.s + 3; },
       [](P p) {
         int s = p.s;
         return dyadic_sum{{1, 9 * s + 8}, {7, 7 * s + 5}, {-7, 8 * s + 6}, {-1, 6 * s + 5}}.value();
       }},
      {"ss1/k=i,i=2s+3+j", "0<=j<=s-1, k=i",
       [](P p) {
         int j = p.i - 2 * p.s - 3;
         return p.k == p.i && j >= 0 && j <= p.s - 1;
       },
       [](P p) {
         int s = p.s, j = p.i - 2 * s - 3;
         return dyadic_sum{{1, 9 * s + 3 * j + 8}, {-7, 8 * s + 4 * j + 6}, {7, 7 * s + 5 * j + 5},
                           {-1, 6 * s + 6 * j + 5}}
             .value();
       }},
      // values one column past the rank
      {"ss1/k=i+1,i=s", "i=s, k=s+1", [](P p) { return p.i == p.s && p.k == p.s + 1; },
       [](P p) { return gamma_low(p.s); }},
      {"ss1/k=i+1,i=s+1", "i=s+1, k=s+2", [](P p) { return p.i == p.s + 1 && p.k == p.s + 2; },
       [](P p) {
         int s = p.s;
         return dyadic_sum{{105, 4 * s - 2}, {-21, 3 * s - 2}, {-3, 2 * s}}.value();
       }},
      {"ss1/k=i+1,i=s+j", "2<=j<=s+2, k=i+1",
       [](P p) {
         int j = p.i - p.s;
         return p.k == p.i + 1 && j >= 2 && j <= p.s + 2;
       },
       [](P p) {
         int s = p.s, j = p.i - s;
         return dyadic_sum{{105, 4 * s + 4 * j - 6}, {-21, 3 * s + 3 * j - 5}, {-315, 2 * s + 5 * j - 10},
                           {105, 2 * s + 4 * j - 8}}
             .value();
       }},
      {"ss1/k=i+1,i=2s+1", "i=2s+1, k=i+1", [](P p) { return p.k == p.i + 1 && p.i == 2 * p.s + 1; },
       [](P p) {
         int s = p.s;
         return dyadic_sum{{105, 8 * s - 2}, {21, 6 * s - 4}, {-315, 7 * s - 5}}.value();
       }},
      {"ss1/k=i+1,i=2s+2", "i=2s+2, k=i+1", [](P p) { return p.k == p.i + 1 && p.i == 2 * p.s + 2; },
       [](P p) {
         int s = p.s;
         return dyadic_sum{{105, 8 * s + 2}, {63, 6 * s}, {-315, 7 * s}}.value();
       }},
      {"ss1/k=i+1,i=2s+3+j", "0<=j<=s-2, k=i+1",
       [](P p) {
         int j = p.i - 2 * p.s - 3;
         return p.k == p.i + 1 && j >= 0 && j <= p.s - 2;
       },
       [](P p) {
         int s = p.s, j = p.i - 2 * s - 3;
         return dyadic_sum{{105, 8 * s + 4 * j + 6}, {105, 6 * s + 6 * j + 5}, {-315, 7 * s + 5 * j + 5}}.value();
       }},
      {"ss1/k=i+1,i=3s+2", "i=3s+2, k=i+1", [](P p) { return p.k == p.i + 1 && p.i == 3 * p.s + 2; },
       [](P p) { return dyadic_sum{{315, 12 * p.s - 1}}.value(); }},
  };
  return t;
}

// [s,s+m,s+m] with m >= 2.
inline const std::vector<formula_case>& ssm_cases() {
  static const std::vector<formula_case> t = {
      {"ssm/i=0", "i=0", [](P p) { return p.i == 0; }, [](P) { return bigint(1); }},
      {"ssm/low", "1<=i<=s-1, k>=i+1", [](P p) { return p.i >= 1 && p.i <= p.s - 1 && p.k >= p.i + 1; },
       [](P p) { return gamma_low(p.i); }},
      {"ssm/i=s", "i=s, k>=s+1", [](P p) { return p.i == p.s && p.k >= p.s + 1; },
       [](P p) {
         int s = p.s, k = p.k;
         return dyadic_sum{{1, k + s - 1}, {-1, 2 * s}, {105, 4 * s - 6}, {-21, 3 * s - 5}}.value();
       }},
      {"ssm/i=s+j", "1<=j<=m-1, k>=s+j+1",
       [](P p) {
         int j = p.i - p.s;
         return j >= 1 && j <= p.m - 1 && p.k >= p.s + j + 1;
       },
       [](P p) {
         int s = p.s, k = p.k, j = p.i - s;
         return dyadic_sum{{21, k + s + 3 * j - 5},       {-3, k + s + 2 * j - 4},   {105, 4 * s + 4 * j - 6},
                           {-21, 3 * s + 3 * j - 5},      {-105, 2 * s + 4 * j - 6}, {21, 2 * s + 3 * j - 5}}
             .value();
       }},
      {"ssm/i=s+m", "i=s+m, k>=s+m+1", [](P p) { return p.i == p.s + p.m && p.k >= p.s + p.m + 1; },
       [](P p) {
         int s = p.s, m = p.m, k = p.k;
         return dyadic_sum{{21, s + 3 * m - 5 + k},
                           {-21, s + 3 * m - 5 + s + m + 1},
                           {45, s + 2 * m - 4 + k},
                           {-45, s + 2 * m - 4 + s + m + 1},
                           {105, 4 * s + 4 * m - 6},
                           {-21, 3 * s + 3 * m - 5},
                           {-21, 2 * s + 4 * m - 6},
                           {9, 2 * s + 3 * m - 5}}
             .value();
       }},
      {"ssm/i=s+m+j", "1<=j<=s-1, k>=s+m+j+1",
       [](P p) {
         int j = p.i - p.s - p.m;
         return j >= 1 && j <= p.s - 1 && p.k >= p.s + p.m + j + 1;
       },
       [](P p) {
         int s = p.s, m = p.m, k = p.k, j = p.i - s - m;
         return dyadic_sum{{21, k + s + 3 * m + 3 * j - 5},        {21 * 35, k + s + 2 * m + 4 * j - 7},
                           {-21 * 9, k + s + 2 * m + 3 * j - 6},   {105, 4 * s + 4 * m + 4 * j - 6},
                           {-21, 3 * s + 3 * m + 3 * j - 5},       {-105, 2 * s + 4 * m + 4 * j - 6},
                           {-21 * 155, 2 * s + 3 * m + 5 * j - 8}, {21 * 45, 2 * s + 3 * m + 4 * j - 7}}
             .value();
       }},
      {"ssm/i=2s+m", "i=2s+m, k>=2s+m+1", [](P p) { return p.i == 2 * p.s + p.m && p.k >= 2 * p.s + p.m + 1; },
       [](P p) {
         int s = p.s, m = p.m, k = p.k;
         return dyadic_sum{{3, 2 * k + 2 * s + m - 2},   {21, k + 4 * s + 3 * m - 5},  {735, k + 5 * s + 2 * m - 7},
                           {-477, k + 4 * s + 2 * m - 6}, {105, 8 * s + 4 * m - 6},    {-105, 6 * s + 4 * m - 6},
                           {-3255, 7 * s + 3 * m - 8},   {1629, 6 * s + 3 * m - 7}}
             .value();
       }},
      {"ssm/i=2s+m+1+j", "0<=j<=m-2, k>=2s+m+2+j",
       [](P p) {
         int j = p.i - 2 * p.s - p.m - 1;
         return j >= 0 && j <= p.m - 2 && p.k >= 2 * p.s + p.m + 2 + j;
       },
       [](P p) {
         int s = p.s, m = p.m, k = p.k, j = p.i - 2 * s - m - 1;
         return dyadic_sum{{21, 2 * k + 2 * s + m + 3 * j - 2},     {21, k + 4 * s + 3 * m + 3 * j - 2},
                           {735, k + 5 * s + 2 * m + 4 * j - 3},    {-945, k + 4 * s + 2 * m + 4 * j - 3},
                           {105, 8 * s + 4 * m + 4 * j - 2},        {-105, 6 * s + 4 * m + 4 * j - 2},
                           {-3255, 7 * s + 3 * m + 5 * j - 3},      {3255, 6 * s + 3 * m + 5 * j - 3}}
             .value();
       }},
      {"ssm/i=2s+2m", "i=2s+2m, k>=2s+2m+1",
       [](P p) { return p.i == 2 * p.s + 2 * p.m && p.k >= 2 * p.s + 2 * p.m + 1; },
       [](P p) {
         int s = p.s, m = p.m, k = p.k;
         return dyadic_sum{{53, 2 * s - 1 + 2 * k + 4 * m - 4},  {-53, 2 * s - 1 + 4 * s + 8 * m - 2},
                           {735, 5 * s - 1 + k + 6 * m - 6},     {-735, 5 * s - 1 + 2 * s + 8 * m - 5},
                           {-1629, 4 * s - 1 + k + 6 * m - 6},   {1629, 4 * s - 1 + 2 * s + 8 * m - 5},
                           {105, 8 * s + 8 * m - 6},             {63, 6 * s + 8 * m - 8},
                           {-315, 7 * s + 8 * m - 8}}
             .value();
       }},
      {"ssm/i=2s+2m+1+j", "0<=j<=s-2, k>=2s+2m+2+j",
       [](P p) {
         int j = p.i - 2 * p.s - 2 * p.m - 1;
         return j >= 0 && j <= p.s - 2 && p.k >= 2 * p.s + 2 * p.m + 2 + j;
       },
       [](P p) {
         int s = p.s, m = p.m, k = p.k, j = p.i - 2 * s - 2 * m - 1;
         return dyadic_sum{{105, 2 * k + 2 * s + 4 * m + 4 * j - 2}, {735, k + 5 * s + 6 * m + 4 * j - 3},
                           {-105 * 31, k + 4 * s + 6 * m + 5 * j - 3}, {105, 8 * s + 8 * m + 4 * j - 2},
                           {-105 * 31, 7 * s + 8 * m + 5 * j - 3}, {105 * 93, 6 * s + 8 * m + 6 * j - 3}}
             .value();
       }},
      {"ssm/i=3s+2m", "i=3s+2m, k>=3s+2m", [](P p) { return p.i == 3 * p.s + 2 * p.m && p.k >= 3 * p.s + 2 * p.m; },
       [](P p) {
         int s = p.s, m = p.m, k = p.k;
         return dyadic_sum{{1, 3 * k + 2 * m + 3 * s - 3}, {-7, 2 * k + 4 * m + 6 * s - 6},
                           {7, k + 6 * m + 9 * s - 8}, {-1, 8 * m + 12 * s - 9}}
             .value();
       }},
      {"ssm/k=i,i<=s+1", "1<=i<=s+1, k=i", [](P p) { return p.k == p.i && p.i >= 1 && p.i <= p.s + 1; },
       [](P p) {
         int s = p.s, m = p.m, i = p.i;
         return dyadic_sum{{1, 3 * s + 2 * m + 3 * i - 3}, {-7, 4 * i - 6}, {3, 3 * i - 5}}.value();
       }},
      {"ssm/k=i,i=s+j", "1<=j<=m+1, k=i",
       [](P p) {
         int j = p.i - p.s;
         return p.k == p.i && j >= 1 && j <= p.m + 1;
       },
       [](P p) {
         int s = p.s, m = p.m, j = p.i - s;
         return dyadic_sum{{1, 6 * s + 2 * m + 3 * j - 3}, {-7, 4 * s + 4 * j - 6}, {3, 3 * s + 3 * j - 5},
                           {1, 2 * s + 4 * j - 6}, {-1, 2 * s + 3 * j - 5}}
             .value();
       }},
      {"ssm/k=i,i=s+m+j", "1<=j<=s-1, k=i",
       [](P p) {
         int j = p.i - p.s - p.m;
         return p.k == p.i && j >= 1 && j <= p.s - 1;
       },
       [](P p) {
         int s = p.s, m = p.m, j = p.i - s - m;
         return dyadic_sum{{1, 6 * s + 5 * m + 3 * j - 3},    {-7, 4 * s + 4 * m + 4 * j - 6},
                           {3, 3 * s + 3 * m + 3 * j - 5},    {1, 2 * s + 4 * m + 4 * j - 6},
                           {7, 2 * s + 3 * m + 5 * j - 8},    {-9, 2 * s + 3 * m + 4 * j - 7}}
             .value();
       }},
      {"ssm/k=i,i=2s+m", "i=2s+m, k=i", [](P p) { return p.k == p.i && p.i == 2 * p.s + p.m; },
       [](P p) {
         int s = p.s, m = p.m;
         return dyadic_sum{{1, 9 * s + 5 * m - 3}, {-7, 8 * s + 4 * m - 6}, {7, 7 * s + 3 * m - 8},
                           {3, 6 * s + 3 * m - 7}, {1, 6 * s + 4 * m - 6}}
             .value();
       }},
      {"ssm/k=i,i=2s+m+1+j", "0<=j<=m-2, k=i",
       [](P p) {
         int j = p.i - 2 * p.s - p.m - 1;
         return p.k == p.i && j >= 0 && j <= p.m - 2;
       },
       [](P p) {
         int s = p.s, m = p.m, j = p.i - 2 * s - m - 1;
         return dyadic_sum{{1, 9 * s + 5 * m + 3 * j},        {-7, 8 * s + 4 * m + 4 * j - 2},
                           {7, 7 * s + 3 * m + 5 * j - 3},    {-3, 6 * s + 3 * m + 5 * j - 3},
                           {1, 6 * s + 4 * m + 4 * j - 2}}
             .value();
       }, "E3"},
      {"ssm/k=i,i=2s+2m", "i=2s+2m, k=i", [](P p) { return p.k == p.i && p.i == 2 * p.s + 2 * p.m; },
       [](P p) {
         int s = p.s, m = p.m;
         return dyadic_sum{{1, 9 * s + 8 * m - 3}, {-7, 8 * s + 8 * m - 6}, {7, 7 * s + 8 * m - 8},
                           {1, 6 * s + 8 * m - 8}}
             .value();
       }, "E4"},
      {"ssm/k=i,i=2s+2m+1+j", "0<=j<=s-2, k=i",
       [](P p) {
         int j = p.i - 2 * p.s - 2 * p.m - 1;
         return p.k == p.i && j >= 0 && j <= p.s - 2;
       },
       [](P p) {
         int s = p.s, m = p.m, j = p.i - 2 * s - 2 * m - 1;
         return dyadic_sum{{1, 9 * s + 8 * m + 3 * j}, {-7, 8 * s + 8 * m + 4 * j - 2},
                           {7, 7 * s + 8 * m + 5 * j - 3}, {-1, 6 * s + 8 * m + 6 * j - 3}}
             .value();
       }},
      {"ssm/k=i,i=3s+2m", "i=3s+2m, k=i", [](P p) { return p.k == p.i && p.i == 3 * p.s + 2 * p.m; },
       [](P p) { return dyadic_sum{{21, 8 * p.m + 12 * p.s - 9}}.value(); }},
      // top rows indexed as i = 2s+m+1+j
      {"ssm/top,i=2s+m+1+j,j=m-1", "j=m-1, k>=2s+2m+1",
       [](P p) { return p.i == 2 * p.s + 2 * p.m && p.k >= 2 * p.s + 2 * p.m + 1; },
       [](P p) {
         int s = p.s, m = p.m, k = p.k;
         return dyadic_sum{{53, 2 * s - 1 + 2 * k + 4 * m - 4},  {-53, 2 * s - 1 + 4 * s + 8 * m - 2},
                           {735, 5 * s - 1 + k + 6 * m - 6},     {-735, 5 * s - 1 + 2 * s + 8 * m - 5},
                           {-1629, 4 * s - 1 + k + 6 * m - 6},   {1629, 4 * s - 1 + 2 * s + 8 * m - 5},
                           {105, 8 * s + 8 * m - 6},             {63, 6 * s + 8 * m - 8},
                           {-315, 7 * s + 8 * m - 8}}
             .value();
       }},
      {"ssm/top,k=i,i=2s+m+1", "j=0, k=i", [](P p) { return p.k == p.i && p.i == 2 * p.s + p.m + 1; },
       [](P p) {
         int s = p.s, m = p.m;
         return dyadic_sum{{1, 9 * s + 5 * m}, {-7, 8 * s + 4 * m - 2}, {7, 7 * s + 3 * m - 3},
                           {-3, 6 * s + 3 * m - 3}, {1, 6 * s + 4 * m - 2}}
             .value();
       }, "E5"},
      {"ssm/top,k=i,i=2s+m+1+j", "0<=j<=m-2, k=i",
       [](P p) {
         int j = p.i - 2 * p.s - p.m - 1;
         return p.k == p.i && j >= 0 && j <= p.m - 2;
       },
       [](P p) {
         int s = p.s, m = p.m, j = p.i - 2 * s - m - 1;
         return dyadic_sum{{1, 9 * s + 5 * m + 3 * j},        {-7, 8 * s + 4 * m + 4 * j - 2},
                           {7, 7 * s + 3 * m + 5 * j - 3},    {-3, 6 * s + 3 * m + 5 * j - 3},
                           {1, 6 * s + 4 * m + 4 * j - 2}}
             .value();
       }, "E6"},
      {"ssm/top,k=i,i=2s+m+1+j,j=m-1", "j=m-1, k=i", [](P p) { return p.k == p.i && p.i == 2 * p.s + 2 * p.m; },
       [](P p) {
         int s = p.s, m = p.m;
         return dyadic_sum{{1, 9 * s + 8 * m - 3}, {-7, 8 * s + 8 * m - 6}, {7, 7 * s + 8 * m - 8},
                           {1, 6 * s + 8 * m - 8}}
             .value();
       }, "E7"},
      {"ssm/top,k=i,i=2s+2m+1", "j=0, k=i", [](P p) { return p.k == p.i && p.i == 2 * p.s + 2 * p.m + 1; },
       [](P p) {
         int s = p.s, m = p.m;
         return dyadic_sum{{1, 9 * s + 8 * m}, {-7, 8 * s + 8 * m - 2}, {7, 7 * s + 8 * m - 3},
                           {-1, 6 * s + 8 * m - 3}}
             .value();
       }, "E8"},
  };
  return t;
}

// [1,1+m,1+m+l]; rows shared by several (m, l) sectors are written once per sector.
inline bool s1_m2plus_head(P p, bigint& out) {
  int m = p.m, k = p.k, i = p.i;
  if (i == 0) return out = 1, true;
  if (i == 1) return out = dyadic_sum{{1, k}, {17, 0}}.value(), true;
  if (i >= 2 && i <= m) {
    out = dyadic_sum{{21, 3 * i - 7 + k}, {-3, 2 * i - 5 + k}, {315, 4 * i - 8}, {-21, 3 * i - 6}}.value();
    return true;
  }
  return false;
}

inline const std::vector<formula_case>& s1_cases() {
  static const std::vector<formula_case> t = {
      // m = 0
      {"s1/m=0,l=0", "l=0, k>=3", [](P p) { return p.m == 0 && p.l == 0 && p.k >= 3 && p.i <= 3; },
       [](P p) {
         int k = p.k;
         switch (p.i) {
           case 0: return bigint(1);
           case 1: return dyadic_sum{{7, k}, {-7, 0}}.value();
           case 2: return dyadic_sum{{7, 2 * k}, {-21, k}, {14, 0}}.value();
           default: return dyadic_sum{{1, 3 * k}, {-7, 2 * k}, {7, k + 1}, {-8, 0}}.value();
         }
       }},
      {"s1/m=0,l=1", "l=1, k>=4", [](P p) { return p.m == 0 && p.l == 1 && p.k >= 4 && p.i <= 4; },
       [](P p) {
         int k = p.k;
         switch (p.i) {
           case 0: return bigint(1);
           case 1: return dyadic_sum{{3, k}, {9, 0}}.value();
           case 2: return dyadic_sum{{1, 2 * k}, {47, k}, {-98, 0}}.value();
           case 3: return dyadic_sum{{27, 2 * k}, {-162, k}, {216, 0}}.value();
           default: return dyadic_sum{{1, 3 * k + 1}, {-7, 2 * k + 2}, {7, k + 4}, {-128, 0}}.value();
         }
       }, "E1"},
      {"s1/m=0,l=2", "l=2, k>=5", [](P p) { return p.m == 0 && p.l == 2 && p.k >= 5 && p.i <= 5; },
       [](P p) {
         int k = p.k;
         switch (p.i) {
           case 0: return bigint(1);
           case 1: return dyadic_sum{{3, k}, {9, 0}}.value();
           case 2: return dyadic_sum{{1, 2 * k}, {15, k}, {158, 0}}.value();
           case 3: return dyadic_sum{{3, 2 * k}, {191, k + 1}, {-1576, 0}}.value();
           case 4: return dyadic_sum{{27, 2 * k + 2}, {-81, k + 4}, {3456, 0}}.value();
           default: return dyadic_sum{{1, 3 * k + 2}, {-7, 2 * k + 4}, {7, k + 7}, {-2048, 0}}.value();
         }
       }, "E2"},
      {"s1/m=0,4<=k<=2+l", "4<=k<=2+l, i<=k",
       [](P p) { return p.m == 0 && p.k >= 4 && p.k <= 2 + p.l && p.i <= p.k; },
       [](P p) {
         int k = p.k, i = p.i, l = p.l;
         if (i == 0) return bigint(1);
         if (i == 1) return dyadic_sum{{3, k}, {9, 0}}.value();
         if (i == 2) return dyadic_sum{{1, 2 * k}, {15, k}, {158, 0}}.value();
         if (i < k) return dyadic_sum{{3, 2 * k + 2 * i - 6}, {63, k + 3 * i - 8}, {315, 4 * i - 9}}.value();
         return dyadic_sum{{1, 3 * k + l}, {-47, 4 * k - 9}}.value();
       }},
      {"s1/m=0,3<=l<=k-3", "3<=l<=k-3, i<=l+3",
       [](P p) { return p.m == 0 && p.l >= 3 && p.l <= p.k - 3 && p.i <= p.l + 3; },
       [](P p) {
         int k = p.k, i = p.i, l = p.l;
         if (i == 0) return bigint(1);
         if (i == 1) return dyadic_sum{{3, k}, {9, 0}}.value();
         if (i == 2) return dyadic_sum{{1, 2 * k}, {15, k}, {158, 0}}.value();
         if (i <= l) return dyadic_sum{{3, 2 * k + 2 * i - 6}, {63, k + 3 * i - 8}, {315, 4 * i - 9}}.value();
         if (i == l + 1) return dyadic_sum{{3, 2 * k + 2 * l - 4}, {191, k + 3 * l - 5}, {-197, 4 * l - 5}}.value();
         if (i == l + 2) return dyadic_sum{{27, 2 * k + 2 * l - 2}, {-81, k + 3 * l - 2}, {27, 4 * l - 1}}.value();
         return dyadic_sum{{1, 3 * k + l}, {-7, 2 * k + 2 * l}, {7, k + 3 * l + 1}, {-1, 4 * l + 3}}.value();
       }},
      // m = 1
      {"s1/m=1,l>=3", "l>=3, k>=2+l, i<=l+5", [](P p) { return p.m == 1 && p.l >= 3 && p.k >= 2 + p.l && p.i <= p.l + 5; },
       [](P p) {
         int k = p.k, i = p.i, l = p.l;
         if (i == 0) return bigint(1);
         if (i == 1) return dyadic_sum{{1, k}, {17, 0}}.value();
         if (i == 2) return dyadic_sum{{17, k}, {230, 0}}.value();
         if (i == 3) return dyadic_sum{{1, 2 * k + 1}, {51, k + 1}, {3784, 0}}.value();
         if (i <= l + 1) return dyadic_sum{{3, 2 * k + 2 * i - 7}, {105, k + 3 * i - 9}, {945, 4 * i - 10}}.value();
         if (i == l + 2) return dyadic_sum{{3, 2 * k + 2 * l - 3}, {233, k + 3 * l - 3}, {433, 4 * l - 2}}.value();
         if (i == l + 3) return dyadic_sum{{11, 2 * k + 2 * l - 1}, {345, k + 3 * l}, {-367, 4 * l + 2}}.value();
         if (i == l + 4) return dyadic_sum{{53, 2 * k + 2 * l + 1}, {-159, k + 3 * l + 3}, {3392, 4 * l}}.value();
         return dyadic_sum{{1, 3 * k + l + 2}, {-7, 2 * k + 2 * l + 4}, {7, k + 3 * l + 7}, {-1, 4 * l + 11}}.value();
       }},
      {"s1/m=1,l=3", "l=3, k>=5, i<=8", [](P p) { return p.m == 1 && p.l == 3 && p.k >= 5 && p.i <= 8; },
       [](P p) {
         int k = p.k;
         switch (p.i) {
           case 0: return bigint(1);
           case 1: return dyadic_sum{{1, k}, {17, 0}}.value();
           case 2: return dyadic_sum{{17, k}, {230, 0}}.value();
           case 3: return dyadic_sum{{1, 2 * k + 1}, {51, k + 1}, {3784, 0}}.value();
           case 4: return dyadic_sum{{3, 2 * k + 1}, {105, k + 3}, {60480, 0}}.value();
           case 5: return dyadic_sum{{3, 2 * k + 3}, {233, k + 6}, {433, 10}}.value();
           case 6: return dyadic_sum{{11, 2 * k + 5}, {345, k + 9}, {-367, 14}}.value();
           case 7: return dyadic_sum{{53, 2 * k + 7}, {-651264, k}, {13893632, 0}}.value();
           default: return dyadic_sum{{1, 3 * k + 5}, {-7, 2 * k + 10}, {7, k + 16}, {-1, 23}}.value();
         }
       }},
      {"s1/m=1,l=2", "l=2, k>=4, i<=7", [](P p) { return p.m == 1 && p.l == 2 && p.k >= 4 && p.i <= 7; },
       [](P p) {
         int k = p.k;
         switch (p.i) {
           case 0: return bigint(1);
           case 1: return dyadic_sum{{1, k}, {17, 0}}.value();
           case 2: return dyadic_sum{{17, k}, {230, 0}}.value();
           case 3: return dyadic_sum{{1, 2 * k + 1}, {51, k + 1}, {3784, 0}}.value();
           case 4: return dyadic_sum{{3, 2 * k + 1}, {233, k + 3}, {433, 6}}.value();
           case 5: return dyadic_sum{{11, 2 * k + 3}, {345, k + 6}, {-367, 10}}.value();
           case 6: return dyadic_sum{{53, 2 * k + 5}, {-159, k + 9}, {3392, 8}}.value();
           default: return dyadic_sum{{1, 3 * k + 4}, {-7, 2 * k + 8}, {7, k + 13}, {-1, 19}}.value();
         }
       }},
      {"s1/m=1,l=1", "l=1, k>=3, i<=6", [](P p) { return p.m == 1 && p.l == 1 && p.k >= 3 && p.i <= 6; },
       [](P p) {
         int k = p.k;
         switch (p.i) {
           case 0: return bigint(1);
           case 1: return dyadic_sum{{1, k}, {17, 0}}.value();
           case 2: return dyadic_sum{{17, k}, {230, 0}}.value();
           case 3: return dyadic_sum{{1, 2 * k + 1}, {115, k + 1}, {1736, 0}}.value();
           case 4: return dyadic_sum{{11, 2 * k + 1}, {345, k + 3}, {-367, 6}}.value();
           case 5: return dyadic_sum{{53, 2 * k + 3}, {-159, k + 6}, {3392, 4}}.value();
           default: return dyadic_sum{{1, 3 * k + 3}, {-7, 2 * k + 6}, {7, k + 10}, {-1, 15}}.value();
         }
       }},
      {"s1/m=1,l=0", "l=0, k>=2, i<=5", [](P p) { return p.m == 1 && p.l == 0 && p.k >= 2 && p.i <= 5; },
       [](P p) {
         int k = p.k;
         switch (p.i) {
           case 0: return bigint(1);
           case 1: return dyadic_sum{{1, k}, {17, 0}}.value();
           case 2: return dyadic_sum{{33, k}, {102, 0}}.value();
           case 3: return dyadic_sum{{3, 2 * k + 1}, {171, k + 1}, {-1464, 0}}.value();
           case 4: return dyadic_sum{{53, 2 * k + 1}, {-159, k + 3}, {3392, 0}}.value();
           default: return dyadic_sum{{1, 3 * k + 2}, {-7, 2 * k + 4}, {7, k + 7}, {-1, 11}}.value();
         }
       }},
      // m >= 2, the single row i = m+3
      {"s1/m>=2,i=m+3", "k>m+3, i=m+3", [](P p) { return p.m >= 2 && p.k > p.m + 3 && p.i == p.m + 3; },
       [](P p) {
         int m = p.m, k = p.k;
         int a = 3, b = 21, c = 315;
         if (p.l == 2) a = 3, b = 149, c = 827;
         if (p.l == 1) a = 11, b = 261, c = 1627;
         if (p.l == 0) a = 21, b = 525, c = 3255;
         return dyadic_sum{{a, 2 * k + m}, {21, k + 3 * m + 2}, {b, k + 2 * m + 1}, {315, 4 * m + 4}, {-c, 3 * m + 3}}
             .value();
       }},
      {"s1/m>=2,l>=3", "k>=2m+l, i<=2m+l+3",
       [](P p) { return p.m >= 2 && p.l >= 3 && p.k >= 2 * p.m + p.l && p.i <= 2 * p.m + p.l + 3; },
       [](P p) {
         int m = p.m, l = p.l, k = p.k, i = p.i;
         bigint v;
         if (s1_m2plus_head(p, v)) return v;
         if (i == m + 1)
           return dyadic_sum{{21, k + 3 * m - 4}, {13, k + 2 * m - 3}, {315, 4 * m - 4}, {-85, 3 * m - 3}}.value();
         if (i == m + 2)
           return dyadic_sum{{1, 2 * k + m}, {21, k + 3 * m - 1}, {9, k + 2 * m - 1}, {315, 4 * m}, {-157, 3 * m}}
               .value();
         if (i <= m + l)
           return dyadic_sum{{3, 2 * k - m + 2 * i - 6}, {21, k + 3 * i - 7}, {21, k - m + 3 * i - 8},
                             {315, 4 * i - 8}, {-315, 4 * i - m - 9}}
               .value();
         if (i == m + l + 1)
           return dyadic_sum{{3, 2 * k + m + 2 * l - 4}, {21, k + 3 * m + 3 * l - 4}, {149, k + 2 * m + 3 * l - 5},
                             {315, 4 * m + 4 * l - 4}, {-827, 3 * m + 4 * l - 5}}
               .value();
         if (i == m + l + 2)
           return dyadic_sum{{11, 2 * k + m + 2 * l - 2}, {21, k + 3 * m + 3 * l - 1}, {261, k + 2 * m + 3 * l - 2},
                             {315, 4 * m + 4 * l}, {-1627, 3 * m + 4 * l - 1}}
               .value();
         if (i <= 2 * m + l + 1)
           return dyadic_sum{{21, 2 * k - 2 * m - l + 3 * i - 9}, {21, k + 3 * i - 7},
                             {525, k - 2 * m - l + 4 * i - 11}, {315, 4 * i - 8},
                             {-3255, 5 * i - 2 * m - l - 12}}
               .value();
         if (i == 2 * m + l + 2)
           return dyadic_sum{{53, 2 * k + 4 * m + 2 * l - 3}, {-159, k + 6 * m + 3 * l - 3}, {53, 8 * m + 4 * l - 2}}
               .value();
         return dyadic_sum{{1, 3 * k + 2 * m + l}, {-7, 2 * k + 4 * m + 2 * l}, {7, k + 6 * m + 3 * l + 1},
                           {-1, 8 * m + 4 * l + 3}}
             .value();
       }},
      {"s1/m>=2,l=2", "k>=2m+2, i<=2m+5", [](P p) { return p.m >= 2 && p.l == 2 && p.k >= 2 * p.m + 2 && p.i <= 2 * p.m + 5; },
       [](P p) {
         int m = p.m, k = p.k, i = p.i;
         bigint v;
         if (s1_m2plus_head(p, v)) return v;
         if (i == m + 1)
           return dyadic_sum{{21, k + 3 * m - 4}, {13, k + 2 * m - 3}, {315, 4 * m - 4}, {-85, 3 * m - 3}}.value();
         if (i == m + 2)
           return dyadic_sum{{1, 2 * k + m}, {21, k + 3 * m - 1}, {9, k + 2 * m - 1}, {315, 4 * m}, {-157, 3 * m}}
               .value();
         if (i == m + 3)
           return dyadic_sum{{3, 2 * k + m}, {21, k + 3 * m + 2}, {149, k + 2 * m + 1}, {315, 4 * m + 4},
                             {-827, 3 * m + 3}}
               .value();
         if (i == m + 4)
           return dyadic_sum{{11, 2 * k + m + 2}, {21, k + 3 * m + 5}, {261, k + 2 * m + 4}, {315, 4 * m + 8},
                             {-1627, 3 * m + 7}}
               .value();
         if (i <= 2 * m + 3)
           return dyadic_sum{{21, 2 * k - 2 * m + 3 * i - 11}, {21, k + 3 * i - 7}, {525, k - 2 * m + 4 * i - 13},
                             {315, 4 * i - 8}, {-3255, 5 * i - 2 * m - 14}}
               .value();
         if (i == 2 * m + 4)
           return dyadic_sum{{53, 2 * k + 4 * m + 1}, {-159, k + 6 * m + 3}, {53, 8 * m + 6}}.value();
         return dyadic_sum{{1, 3 * k + 2 * m + 2}, {-7, 2 * k + 4 * m + 4}, {7, k + 6 * m + 7}, {-1, 8 * m + 11}}
             .value();
       }},
      {"s1/m>=2,l=1", "k>=2m+1, i<=2m+4", [](P p) { return p.m >= 2 && p.l == 1 && p.k >= 2 * p.m + 1 && p.i <= 2 * p.m + 4; },
       [](P p) {
         int m = p.m, k = p.k, i = p.i;
         bigint v;
         if (s1_m2plus_head(p, v)) return v;
         if (i == m + 1)
           return dyadic_sum{{21, k + 3 * m - 4}, {13, k + 2 * m - 3}, {315, 4 * m - 4}, {-85, 3 * m - 3}}.value();
         if (i == m + 2)
           return dyadic_sum{{1, 2 * k + m}, {21, k + 3 * m - 1}, {73, k + 2 * m - 1}, {315, 4 * m}, {-413, 3 * m}}
               .value();
         if (i == m + 3)
           return dyadic_sum{{11, 2 * k + m}, {21, k + 3 * m + 2}, {261, k + 2 * m + 1}, {315, 4 * m + 4},
                             {-1627, 3 * m + 3}}
               .value();
         if (i <= 2 * m + 2)
           return dyadic_sum{{21, 2 * k - 2 * m + 3 * i - 10}, {21, k + 3 * i - 7}, {525, k - 2 * m + 4 * i - 12},
                             {315, 4 * i - 8}, {-3255, 5 * i - 2 * m - 13}}
               .value();
         if (i == 2 * m + 3) return dyadic_sum{{53, 2 * k + 4 * m - 1}, {-159, k + 6 * m}, {53, 8 * m + 2}}.value();
         return dyadic_sum{{1, 3 * k + 2 * m + 1}, {-7, 2 * k + 4 * m + 2}, {7, k + 6 * m + 4}, {-1, 8 * m + 7}}
             .value();
       }},
      {"s1/m>=2,l=0", "k>=2m, i<=2m+3", [](P p) { return p.m >= 2 && p.l == 0 && p.k >= 2 * p.m && p.i <= 2 * p.m + 3; },
       [](P p) {
         int m = p.m, k = p.k, i = p.i;
         bigint v;
         if (s1_m2plus_head(p, v)) return v;
         if (i == m + 1)
           return dyadic_sum{{21, k + 3 * m - 4}, {45, k + 2 * m - 3}, {315, 4 * m - 4}, {-213, 3 * m - 3}}.value();
         if (i == m + 2)
           return dyadic_sum{{3, 2 * k + m}, {21, k + 3 * m - 1}, {129, k + 2 * m - 1}, {315, 4 * m}, {-813, 3 * m}}
               .value();
         if (i <= 2 * m + 1)
           return dyadic_sum{{21, 2 * k - 2 * m + 3 * i - 9}, {21, k + 3 * i - 7}, {525, k - 2 * m + 4 * i - 11},
                             {315, 4 * i - 8}, {-3255, 5 * i - 2 * m - 12}}
               .value();
         if (i == 2 * m + 2) return dyadic_sum{{53, 2 * k + 4 * m - 3}, {-159, k + 6 * m - 3}, {53, 8 * m - 2}}.value();
         return dyadic_sum{{1, 3 * k + 2 * m}, {-7, 2 * k + 4 * m}, {7, k + 6 * m + 1}, {-1, 8 * m + 3}}.value();
       }},
  };
  return t;
}

}  // namespace detail

// Tables a caller may search, in dispatch order.
enum class formula_family { general, sss, ss1, ssm, s1 };

inline const std::vector<formula_case>& cases_of(formula_family f) {
  switch (f) {
    case formula_family::general: return detail::general_cases();
    case formula_family::sss: return detail::sss_cases();
    case formula_family::ss1: return detail::ssm1_cases();
    case formula_family::ssm: return detail::ssm_cases();
    default: return detail::s1_cases();
  }
}

// Families whose tables describe the given shape.
inline std::vector<formula_family> families_for(int s, int m, int l) {
  std::vector<formula_family> out;
  if (l == 0 && m == 0) out.push_back(formula_family::sss);
  if (l == 0 && m == 1) out.push_back(formula_family::ss1);
  if (l == 0 && m >= 2) out.push_back(formula_family::ssm);
  if (s == 1) out.push_back(formula_family::s1);
  out.push_back(formula_family::general);
  return out;
}

inline FormulaResult make_result(const formula_case& c, const gamma_point& p) {
  bigint v = c.eval(p);
  if (v < 0) throw consistency_error(std::string("negative value from case ") + c.source);
  return {v, c.source, c.validity};
}

// Every case (of every matching family) that claims the point.
inline std::vector<FormulaResult> all_closed_forms(const gamma_point& p) {
  std::vector<FormulaResult> out;
  for (auto f : families_for(p.s, p.m, p.l))
    for (const auto& c : cases_of(f))
      if (c.applies(p)) out.push_back(make_result(c, p));
  return out;
}

inline std::optional<FormulaResult> first_case(const std::vector<formula_case>& table, const gamma_point& p) {
  for (const auto& c : table)
    if (c.applies(p)) {
      FormulaResult r = make_result(c, p);
      if (c.erratum) r.erratum = c.erratum;
      return r;
    }
  return std::nullopt;
}

namespace detail {
inline std::string point_text(const gamma_point& p) {
  return "s=" + std::to_string(p.s) + " m=" + std::to_string(p.m) + " l=" + std::to_string(p.l) +
         " k=" + std::to_string(p.k) + " i=" + std::to_string(p.i);
}

inline FormulaResult from_family(formula_family f, const gamma_point& p, const char* what) {
  if (p.k < 1 || p.i < 0) throw unsupported_error(std::string(what) + ": bad point " + point_text(p));
  int top = std::min(p.k, 3 * p.s + 2 * p.m + p.l);
  if (p.i > top) return {0, "rank-bound", "i>min(k,rows)", ""};
  if (auto r = first_case(cases_of(f), p)) return *r;
  throw unsupported_error(std::string(what) + ": no case covers " + point_text(p));
}
}  // namespace detail

inline FormulaResult gamma_sss(int s, int k, int i) {
  if (s < 1) throw shape_error("gamma_sss: s must be positive");
  return detail::from_family(formula_family::sss, {s, 0, 0, k, i}, "gamma_sss");
}

inline FormulaResult gamma_ssm(int s, int m, int k, int i) {
  if (s < 1 || m < 0) throw shape_error("gamma_ssm: need s>=1, m>=0");
  if (m == 0) return gamma_sss(s, k, i);
  return detail::from_family(m == 1 ? formula_family::ss1 : formula_family::ssm, {s, m, 0, k, i}, "gamma_ssm");
}

inline FormulaResult gamma_s1(int m, int l, int k, int i) {
  if (m < 0 || l < 0) throw shape_error("gamma_s1: need m>=0, l>=0");
  return detail::from_family(formula_family::s1, {1, m, l, k, i}, "gamma_s1");
}

// Any closed form claiming the point, searched family by family.
inline std::optional<FormulaResult> closed_form(const TripleShape& sh, int i) {
  sh.validate();
  if (i < 0 || i > sh.max_rank()) return FormulaResult{0, "rank-bound", "i>min(k,rows)", ""};
  gamma_point p{sh.s, sh.m, sh.l, sh.k, i};
  for (auto f : families_for(sh.s, sh.m, sh.l))
    if (auto r = first_case(cases_of(f), p)) return r;
  return std::nullopt;
}

// a_j^(n) by its two-term recurrence, a_0 = a_n = 1.
inline bigint a_coeff(int n, int j) {
  if (n < 1) throw shape_error("a_coeff: n must be positive");
  if (j < 0 || j > n) return 0;
  std::vector<bigint> row{1, 1};
  for (int r = 2; r <= n; ++r) {
    std::vector<bigint> next(r + 1);
    next[0] = 1;
    next[r] = 1;
    for (int t = 1; t < r; ++t) next[t] = (row[t] << t) + row[t - 1];
    row.swap(next);
  }
  return row[j];
}

// Product over l = 0..len-1 of (2^top - 2^l) / (2^bot - 2^l); exact.
inline bigint gauss_ratio(int top, int bot, int len) {
  bigint num = 1, den = 1;
  for (int l = 0; l < len; ++l) {
    num *= pow2(top) - pow2(l);
    den *= pow2(bot) - pow2(l);
  }
  if (den == 0 || num % den != 0) throw consistency_error("gauss_ratio: inexact division");
  return num / den;
}

// The alternating-sum expression for a_j^(n).
inline bigint a_coeff_explicit(int n, int j) {
  if (n < 1) throw shape_error("a_coeff_explicit: n must be positive");
  if (j < 0 || j > n) return 0;
  if (j == 0 || j == n) return 1;
  bigint acc = pow2(static_cast<long>(j) * n - static_cast<long>(j) * (j - 1) / 2);
  if (j & 1) acc = -acc;
  for (int s = 0; s <= j - 1; ++s) {
    bigint term = gauss_ratio(n + 1, j - s, j - s) << static_cast<unsigned>(s * (n - j) + s * (s + 1) / 2);
    acc += (s & 1) ? -term : term;
  }
  return acc;
}

// 2^{2n-2i+4} a_{i-2} + 3*2^{n-i+1} a_{i-1} + a_i, evaluated exactly.
inline bigint a_combination(int n, int i) {
  dyadic_sum d;
  d.add(a_coeff(n, i - 2), 2 * n - 2 * i + 4).add(3 * a_coeff(n, i - 1), n - i + 1).add(a_coeff(n, i), 0);
  return d.value();
}

// Number of rows x cols matrices over F2 of rank i.
inline bigint count_rank_unstructured(int rows, int cols, int i) {
  if (rows < 0 || cols < 0) throw shape_error("count_rank_unstructured: negative dimension");
  if (i < 0 || i > std::min(rows, cols)) return 0;
  bigint num = 1, den = 1;
  for (int t = 0; t < i; ++t) {
    num *= (pow2(rows) - pow2(t)) * (pow2(cols) - pow2(t));
    den *= pow2(i) - pow2(t);
  }
  if (num % den != 0) throw consistency_error("count_rank_unstructured: inexact division");
  return num / den;
}

// Rank-i count for n unstructured rows above the two blocks of double_dist.
inline bigint gamma_mixed_from_doubles(const MixedShape& ms, int i, const RankDistribution& double_dist) {
  ms.validate();
  if (double_dist.fam != family::dbl || double_dist.rows1 != 1 + ms.m || double_dist.rows2 != 1 + ms.m + ms.l ||
      double_dist.k != ms.k)
    throw shape_error("gamma_mixed_from_doubles: distribution does not match the mixed shape");
  if (i < 0 || i > ms.max_rank()) return 0;
  if (ms.n == 0) return double_dist.at(i);
  bigint acc = 0;
  for (int j = 0; j <= ms.n && j <= i; ++j) {
    bigint g = double_dist.at(i - j);
    if (g == 0) continue;
    bigint prod = 1;
    for (int t = 1; t <= j; ++t) prod *= pow2(ms.k) - pow2(i - t);
    acc += (a_coeff(ms.n, j) * prod * g) << static_cast<unsigned>((ms.n - j) * (i - j));
  }
  return acc;
}

// Rank-i count after appending one free row to the double stack of double_dist.
inline bigint gamma_append_row(const RankDistribution& double_dist, int k, int i) {
  if (double_dist.fam != family::dbl || double_dist.k != k)
    throw shape_error("gamma_append_row: need a double distribution at width k");
  int top = std::min(k, double_dist.rows1 + double_dist.rows2 + 1);
  if (i < 0) throw unsupported_error("gamma_append_row: negative rank");
  if (i > top) return 0;
  if (i == 0) return double_dist.at(0);
  return (pow2(k) - pow2(i - 1)) * double_dist.at(i - 1) + (double_dist.at(i) << static_cast<unsigned>(i));
}

struct reduction {
  TripleShape target;  // shape' at width k - delta
  int i = 0;           // i'
  int e = 0;           // factor 16^e
  std::string rule;
};

// Every stated reduction whose window contains (sh, i).
inline std::vector<reduction> reductions(const TripleShape& sh, int i) {
  sh.validate();
  std::vector<reduction> out;
  const int s = sh.s, m = sh.m, l = sh.l, k = sh.k;
  auto push = [&](TripleShape t, int ti, int e, const char* rule) {
    if (t.k >= 1 && ti >= 0 && ti <= t.k) out.push_back({t, ti, e, rule});
  };
  if (s == 1) {
    int j = i - (m + 3);
    if (j >= 0 && j <= l) push({1, m, l - j, k - j}, m + 3, j, "s1/shift-l");
    j = i - (m + l + 3);
    if (j >= 0 && j <= m) push({1, m - j, 0, k - 2 * j - l}, m + 3 - j, 2 * j + l, "s1/shift-m");
  }
  if (l == 0 && m == 0) {
    int j = i - (2 * s + 1);
    if (j >= 0 && ((j <= s - 2 && k >= 2 * s + 2 + j) || (j <= s - 1 && k == i)))
      push({s - j, 0, 0, k - 3 * j}, 2 * (s - j) + 1, 3 * j, "sss/top");
    if (i == 3 * s && k >= 3 * s) push({1, 0, 0, k - 3 * (s - 1)}, 3, 3 * (s - 1), "sss/i=3s");
  }
  if (l == 0 && m == 1) {
    int j = i - (2 * s + 2);
    if (j >= 0 && j <= 1 && k >= i) push({s, 1 - j, 0, k - 2 * j}, 2 * s + 2 - j, 2 * j, "ss1/mid");
    j = i - (2 * s + 3);
    if (j >= 0 && j <= s - 1 && k >= i) push({s - j, 0, 0, k - 2 - 3 * j}, 2 * (s - j) + 1, 2 + 3 * j, "ss1/top");
  }
  if (l == 0 && m >= 2) {
    int j = i - (2 * s + m + 1);
    if (j >= 0 && j <= m - 2 && k >= 2 * s + m + 2 + j)
      push({s, m - j, 0, k - 2 * j}, 2 * s + 1 + (m - j), 2 * j, "ssm/mid");
    if (j == m - 1 && k >= 2 * s + 2 * m + 1) push({s, 1, 0, k - 2 * m + 2}, 2 * s + 2, 2 * m - 2, "ssm/mid,j=m-1");
    j = i - (2 * s + 2 * m + 1);
    if (j >= 0 && j <= s - 2 && k >= 2 * s + 2 * m + 2 + j)
      push({s - j, 0, 0, k - 2 * m - 3 * j}, 2 * (s - j) + 1, 2 * m + 3 * j, "ssm/top");
    if (i == 3 * s + 2 * m && k >= 3 * s + 2 * m)
      push({1, 0, 0, k - 2 * m - 3 * s + 3}, 3, 2 * m + 3 * s - 3, "ssm/i=3s+2m");
  }
  return out;
}

inline std::optional<reduction> reduction_map(const TripleShape& sh, int i) {
  auto all = reductions(sh, i);
  if (all.empty()) return std::nullopt;
  return all.front();
}

}  // namespace persym
