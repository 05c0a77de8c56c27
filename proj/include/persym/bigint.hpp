#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace persym {

using bigint = boost::multiprecision::cpp_int;

inline bigint pow2(long e) {
  if (e < 0) throw consistency_error("pow2: negative exponent " + std::to_string(e));
  bigint r = 1;
  r <<= static_cast<unsigned>(e);
  return r;
}

inline std::string to_string(const bigint& v) { return v.str(); }

// Sum of terms c * 2^e where e may be negative; the total must be an integer.
class dyadic_sum {
 public:
  dyadic_sum() = default;
  dyadic_sum(std::initializer_list<std::pair<bigint, long>> terms) : terms_(terms) {}

  dyadic_sum& add(bigint c, long e) {
    terms_.emplace_back(std::move(c), e);
    return *this;
  }
  dyadic_sum& sub(bigint c, long e) { return add(-std::move(c), e); }

  bigint value() const {
    long lo = 0;
    for (const auto& [c, e] : terms_) lo = std::min(lo, e);
    bigint acc = 0;
    for (const auto& [c, e] : terms_) acc += c << static_cast<unsigned>(e - lo);
    if (lo == 0) return acc;
    bigint q = acc >> static_cast<unsigned>(-lo);
    if ((q << static_cast<unsigned>(-lo)) != acc)
      throw consistency_error("dyadic_sum: non-integral total");
    return q;
  }

 private:
  std::vector<std::pair<bigint, long>> terms_;
};

// Writes v = c * 2^e with c odd (v = 0 gives c = 0, e = 0).
struct pow2_factored {
  bigint odd;
  long exp = 0;
};

inline pow2_factored factor_pow2(const bigint& v) {
  if (v == 0) return {0, 0};
  bigint mag = abs(v);
  long e = static_cast<long>(boost::multiprecision::lsb(mag));
  return {v >> static_cast<unsigned>(e), e};
}

inline std::string factored_string(const bigint& v) {
  auto f = factor_pow2(v);
  if (f.exp == 0) return f.odd.str();
  return f.odd.str() + "*2^" + std::to_string(f.exp);
}

}  // namespace persym
