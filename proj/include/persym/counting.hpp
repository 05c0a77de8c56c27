#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "config.hpp"
#include "enumeration.hpp"
#include "errors.hpp"
#include "f2core.hpp"
#include "formulas.hpp"
#include "recurrence.hpp"

namespace persym {

// One factor E(c Y X) of a character sum: c is a truncated Laurent
// coefficient vector (bit d holds the coefficient of T^-(d+1)), X ranges
// over polynomials with `cap` coefficients.
struct character_block {
  word coeffs = 0;
  int cap = 0;
};

namespace detail {

// Sum over Y (deg < k) and all multipliers of the product of characters.
// E(c Y X) is the parity of the T^-1 coefficient, i.e. of (Y X) & c.
inline bigint character_sum(const std::vector<character_block>& blocks, int k, int budget, const char* what) {
  int work = k;
  for (const auto& b : blocks) work += b.cap;
  check_budget(work, budget, what);
  int xbits = 0;
  for (const auto& b : blocks) xbits += b.cap;
  const word ny = word{1} << k, nx = word{1} << xbits;
  std::int64_t total = 0;
  for (word y = 0; y < ny; ++y) {
    for (word x = 0; x < nx; ++x) {
      int par = 0, off = 0;
      for (const auto& b : blocks) {
        const word xb = (x >> off) & low_mask(static_cast<std::size_t>(b.cap));
        par ^= std::popcount(clmul(y, xb) & b.coeffs) & 1;
        off += b.cap;
      }
      total += par ? -1 : 1;
    }
  }
  return bigint(total);
}

}  // namespace detail

// g(t, eta, xi) by explicit summation over (Y, Z, U, V).
inline bigint exp_sum_direct(const CoefficientTriple& p, const TripleShape& sh, const run_options& opt = {}) {
  check_coefficients(p, sh);
  std::vector<character_block> blocks{{word_from_bits(p.alpha), sh.rows1()},
                                      {word_from_bits(p.beta), sh.rows2()},
                                      {word_from_bits(p.gamma), sh.rows3()}};
  return detail::character_sum(blocks, sh.k, opt.bit_budget, "exp_sum_direct");
}

// 2^(3s+2m+l+k-r): the value the character sum must take.
inline bigint exp_sum_from_rank(const TripleShape& sh, int r) { return pow2(sh.total_rows() + sh.k - r); }

// Mixed point: n unstructured rows, t with k+m bits, eta with k+m+l bits.
// Each unstructured row pairs with a constant multiplier, t with deg Z <= m
// and eta with deg U <= m+l, so the sum is 2^(k+2m+l+n+2-r).
inline bigint exp_sum_mixed(const BitMatrix& general_rows, const bitseq& t, const bitseq& eta, const MixedShape& ms,
                            const run_options& opt = {}) {
  (void)stack_mixed(general_rows, t, eta, ms);  // shape checks
  std::vector<character_block> blocks;
  for (int j = 0; j < ms.n; ++j) {
    word row = 0;
    for (int c = 0; c < ms.k; ++c)
      if (general_rows.get(static_cast<std::size_t>(j), static_cast<std::size_t>(c))) row |= word{1} << c;
    blocks.push_back({row, 1});
  }
  blocks.push_back({word_from_bits(t), 1 + ms.m});
  blocks.push_back({word_from_bits(eta), 1 + ms.m + ms.l});
  return detail::character_sum(blocks, ms.k, opt.bit_budget, "exp_sum_mixed");
}

inline bigint exp_sum_mixed_from_rank(const MixedShape& ms, int r) { return pow2(ms.k + 2 * ms.m + ms.l + ms.n + 2 - r); }

// Sum of g^q over every coset point, times the cell volume 2^-(total bits).
inline bigint power_sum_direct(const TripleShape& sh, int q, const run_options& opt = {}) {
  sh.validate();
  if (q < 1) throw shape_error("power_sum_direct: q >= 1");
  detail::check_budget(sh.total_bits() + sh.k + sh.total_rows(), opt.bit_budget, "power_sum_direct");
  const word na = word{1} << sh.alpha_bits(), nb = word{1} << sh.beta_bits(), ng = word{1} << sh.gamma_bits();
  bigint acc = 0;
  for (word a = 0; a < na; ++a)
    for (word b = 0; b < nb; ++b)
      for (word g = 0; g < ng; ++g) {
        std::vector<character_block> blocks{{a, sh.rows1()}, {b, sh.rows2()}, {g, sh.rows3()}};
        bigint v = detail::character_sum(blocks, sh.k, 62, "power_sum_direct");
        acc += pow(v, static_cast<unsigned>(q));
      }
  dyadic_sum ds{{acc, -static_cast<long>(sh.total_bits())}};
  return ds.value();
}

namespace detail {

inline bigint weighted_power_sum(const RankDistribution& dist, int q, long lead) {
  dyadic_sum ds;
  for (int i = 0; i < static_cast<int>(dist.counts.size()); ++i)
    if (dist.counts[static_cast<std::size_t>(i)] != 0)
      ds.add(dist.counts[static_cast<std::size_t>(i)], lead - static_cast<long>(i) * q);
  return ds.value();
}

inline bigint triple_r_q(int q, const RankDistribution& dist) {
  if (dist.fam != family::triple) throw shape_error("r_q: needs a triple distribution");
  if (q < 1) throw shape_error("r_q: q >= 1");
  const TripleShape& sh = dist.triple;
  const long lead = static_cast<long>(sh.k + sh.total_rows()) * q - sh.total_bits();
  return weighted_power_sum(dist, q, lead);
}

}  // namespace detail

// R_q(k, s, m) from the rank distribution of [s, s+m, s+m] x k.
inline bigint r_q(int q, const RankDistribution& dist) {
  if (dist.fam == family::triple && dist.triple.l != 0)
    throw unsupported_error("r_q: l > 0 needs r_q_extrapolated");
  return detail::triple_r_q(q, dist);
}

// Same prefactor with l > 0 allowed.
struct extrapolated_count {
  bigint value;
  bool extrapolated = false;
};

inline extrapolated_count r_q_extrapolated(int q, const RankDistribution& dist) {
  return {detail::triple_r_q(q, dist), dist.triple.l != 0};
}

// Mixed count with prefactor 2^(q(k+2m+l+n+4) - (2m+l+k(n+2))).
inline bigint r_q_mixed(int q, const RankDistribution& dist) {
  if (dist.fam != family::mixed) throw shape_error("r_q_mixed: needs a mixed distribution");
  if (q < 1) throw shape_error("r_q_mixed: q >= 1");
  const MixedShape& ms = dist.mixed;
  const long lead = static_cast<long>(ms.k + 2 * ms.m + ms.l + ms.n + 4) * q - ms.total_bits();
  return detail::weighted_power_sum(dist, q, lead);
}

struct fraction {
  bigint num, den;
  std::string source;

  std::string str() const { return num.str() + "/" + den.str(); }
};

inline fraction reduced(bigint num, bigint den, std::string source) {
  bigint g = gcd(num, den);
  if (g == 0) g = 1;
  return {num / g, den / g, std::move(source)};
}

// Share of invertible matrices among [s, s+m, s+m] x (3s+2m).
inline fraction invertible_fraction(int s, int m, const run_options& opt = {}) {
  if (s < 1 || m < 0) throw shape_error("invertible_fraction: need s >= 1, m >= 0");
  const int n = 3 * s + 2 * m;
  TripleShape sh{s, m, 0, n};
  const bigint den = pow2(sh.total_bits());
  if (m >= 2) {
    auto r = gamma_ssm(s, m, n, n);
    return reduced(r.value, den, "closed:" + r.source);
  }
  if (sh.total_bits() <= opt.bit_budget) return reduced(gamma_bruteforce(sh, opt).at(n), den, "brute");
  recurrence_options ro;
  ro.run = opt;
  return reduced(gamma_recursive(sh, ro).at(n), den, "recurrence");
}

}  // namespace persym
