#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "bigint.hpp"
#include "config.hpp"
#include "f2core.hpp"

namespace persym {

enum class method { brute, closed, recurrence, kernel };

inline const char* method_name(method m) {
  switch (m) {
    case method::brute: return "brute";
    case method::closed: return "closed";
    case method::recurrence: return "recurrence";
    case method::kernel: return "kernel";
  }
  return "?";
}

enum class family { triple, dbl, mixed };

struct RankDistribution {
  family fam = family::triple;
  TripleShape triple{};
  MixedShape mixed{};
  int rows1 = 0, rows2 = 0;  // double stacks
  int k = 1;
  method how = method::brute;
  std::vector<bigint> counts;

  int total_rows() const {
    switch (fam) {
      case family::triple: return triple.total_rows();
      case family::dbl: return rows1 + rows2;
      case family::mixed: return mixed.total_rows();
    }
    return 0;
  }
  int max_rank() const { return std::min(k, total_rows()); }
  int total_bits() const {
    switch (fam) {
      case family::triple: return triple.total_bits();
      case family::dbl: return 2 * k + rows1 + rows2 - 2;
      case family::mixed: return mixed.total_bits();
    }
    return 0;
  }
  // Gamma_i with zero outside 0..max_rank.
  bigint at(int i) const {
    if (i < 0 || i >= static_cast<int>(counts.size())) return 0;
    return counts[static_cast<std::size_t>(i)];
  }
};

inline RankDistribution make_triple_distribution(const TripleShape& sh, method how, std::vector<bigint> counts) {
  RankDistribution d;
  d.fam = family::triple;
  d.triple = sh;
  d.k = sh.k;
  d.how = how;
  d.counts = std::move(counts);
  return d;
}

namespace detail {

inline void check_budget(int bits, int budget, const std::string& what) {
  if (bits > budget || bits > 62)
    throw resource_error(what + ": " + std::to_string(bits) + " coefficient bits exceed budget " +
                         std::to_string(budget));
}

struct block_walk {
  std::vector<int> rows;  // persymmetric block row counts, outermost first
  std::vector<int> bits;  // coefficient bits per block
  std::vector<int> tail;  // bits of blocks strictly after b
  int k = 1;
  word colmask = 1;

  block_walk(std::vector<int> r, int width) : rows(std::move(r)), k(width), colmask(low_mask(width)) {
    bits.resize(rows.size());
    tail.assign(rows.size(), 0);
    for (std::size_t b = 0; b < rows.size(); ++b) bits[b] = width + rows[b] - 1;
    for (std::size_t b = rows.size(); b-- > 1;) tail[b - 1] = tail[b] + bits[b];
  }

  void descend(std::size_t b, const echelon_basis& parent, std::vector<std::uint64_t>& hist,
               std::vector<echelon_basis>& scratch) const {
    echelon_basis& cur = scratch[b];
    const word n = word{1} << bits[b];
    const int r = rows[b];
    const bool last = b + 1 == rows.size();
    for (word c = 0; c < n; ++c) {
      cur.assign(parent);
      for (int j = 0; j < r && cur.rank < k; ++j) cur.insert((c >> j) & colmask);
      if (last)
        ++hist[static_cast<std::size_t>(cur.rank)];
      else if (cur.rank == k)
        hist[static_cast<std::size_t>(k)] += std::uint64_t{1} << tail[b];
      else
        descend(b + 1, cur, hist, scratch);
    }
  }

  // Values of the outermost block whose top bits equal `slice`.
  void run_slice(word slice, int slice_bits, std::vector<std::uint64_t>& hist) const {
    std::vector<echelon_basis> scratch(rows.size() + 1);
    const int low = bits[0] - slice_bits;
    const word n = word{1} << low;
    const bool last = rows.size() == 1;
    echelon_basis& cur = scratch[rows.size()];
    for (word lo = 0; lo < n; ++lo) {
      word c = (slice << low) | lo;
      cur.rank = 0;
      for (int j = 0; j < rows[0] && cur.rank < k; ++j) cur.insert((c >> j) & colmask);
      if (last)
        ++hist[static_cast<std::size_t>(cur.rank)];
      else if (cur.rank == k)
        hist[static_cast<std::size_t>(k)] += std::uint64_t{1} << tail[0];
      else
        descend(1, cur, hist, scratch);
    }
  }
};

// Rank histogram over every choice of coefficients for the listed
// persymmetric blocks, stacked at width k (a one-row block is a free row).
inline std::vector<bigint> block_histogram(const std::vector<int>& rows, int k, unsigned workers) {
  block_walk walk(rows, k);
  int total_rows = 0;
  for (int r : rows) total_rows += r;
  const std::size_t width = static_cast<std::size_t>(std::min(k, total_rows)) + 1;

  int slice_bits = 0;
  while ((1u << slice_bits) < workers && slice_bits < walk.bits[0]) ++slice_bits;
  const word slices = word{1} << slice_bits;
  const unsigned nthreads = static_cast<unsigned>(std::min<word>(slices, std::max(1u, workers)));

  std::vector<std::vector<std::uint64_t>> partial(nthreads, std::vector<std::uint64_t>(width + 1, 0));
  auto job = [&](unsigned t) {
    for (word sl = t; sl < slices; sl += nthreads) walk.run_slice(sl, slice_bits, partial[t]);
  };
  if (nthreads == 1) {
    job(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(job, t);
    for (auto& th : pool) th.join();
  }
  std::vector<bigint> out(width, 0);
  for (const auto& p : partial)
    for (std::size_t i = 0; i < width; ++i) out[i] += p[i];
  return out;
}

}  // namespace detail

inline RankDistribution gamma_bruteforce(const TripleShape& sh, const run_options& opt = {}) {
  sh.validate();
  detail::check_budget(sh.total_bits(), opt.bit_budget, "gamma_bruteforce");
  return make_triple_distribution(
      sh, method::brute, detail::block_histogram({sh.rows1(), sh.rows2(), sh.rows3()}, sh.k, opt.workers));
}

inline RankDistribution gamma_bruteforce_double(int rows1, int rows2, int k, const run_options& opt = {}) {
  if (rows1 < 1 || rows2 < 1 || k < 1) throw shape_error("double stack needs positive rows and width");
  RankDistribution d;
  d.fam = family::dbl;
  d.rows1 = rows1;
  d.rows2 = rows2;
  d.k = k;
  detail::check_budget(d.total_bits(), opt.bit_budget, "gamma_bruteforce_double");
  d.counts = detail::block_histogram({rows1, rows2}, k, opt.workers);
  return d;
}

inline RankDistribution gamma_bruteforce_mixed(const MixedShape& ms, const run_options& opt = {}) {
  ms.validate();
  RankDistribution d;
  d.fam = family::mixed;
  d.mixed = ms;
  d.k = ms.k;
  detail::check_budget(ms.total_bits(), opt.bit_budget, "gamma_bruteforce_mixed");
  std::vector<int> rows(static_cast<std::size_t>(ms.n), 1);
  rows.push_back(1 + ms.m);
  rows.push_back(1 + ms.m + ms.l);
  d.counts = detail::block_histogram(rows, ms.k, opt.workers);
  return d;
}

namespace detail {

// Number of subspaces of F2^k, as a double for cost estimates.
inline double subspace_count(int k) {
  double total = 0;
  for (int d = 0; d <= k; ++d) {
    double g = 1;
    for (int t = 0; t < d; ++t) g *= (std::ldexp(1.0, k - t) - 1) / (std::ldexp(1.0, d - t) - 1);
    total += g;
  }
  return total;
}

inline bigint gaussian_binomial(int n, int d) {
  if (d < 0 || d > n) return 0;
  bigint num = 1, den = 1;
  for (int t = 0; t < d; ++t) {
    num *= pow2(n - t) - 1;
    den *= pow2(d - t) - 1;
  }
  return num / den;
}

// Rank histogram of stacked persymmetric blocks, walking the blocks in
// order and keeping K, the common kernel so far. At each node either the
// next block's coefficients are enumerated and K shrinks, or every subspace
// W of K is visited: the remaining blocks killing W form a linear space
// whose dimension is one small elimination per block away. Summing over W
// of dimension d gives sum_j N_j [j, d]_2 with N_j the number of stacks of
// nullity j, a triangular system. Rank is k - nullity.
class kernel_walk {
 public:
  kernel_walk(std::vector<int> rows, int k) : rows_(std::move(rows)), k_(k) {
    if (rows_.empty() || k < 1 || k > 62) throw shape_error("kernel_histogram: bad stack");
    std::sort(rows_.rbegin(), rows_.rend());
    for (int r : rows_)
      if (r + k - 1 > 62) throw resource_error("kernel_histogram: block wider than a machine word");
    suffix_bits_.assign(rows_.size() + 1, 0);
    for (std::size_t b = rows_.size(); b-- > 0;) suffix_bits_[b] = suffix_bits_[b + 1] + rows_[b] + k - 1;
    tally_.resize(static_cast<std::size_t>(k + 1));
    exact_.assign(static_cast<std::size_t>(k + 1), 0);
    for (int e = 0; e <= k; ++e)
      tally_[static_cast<std::size_t>(e)].assign(
          static_cast<std::size_t>(e + 1), std::vector<std::uint64_t>(static_cast<std::size_t>(suffix_bits_[0] + 1)));
  }

  std::vector<bigint> run() {
    std::vector<word> kernel;
    for (int c = 0; c < k_; ++c) kernel.push_back(word{1} << c);
    walk(0, kernel);
    return finish();
  }

  // log2 of the work along the generic path.
  static double cost(std::vector<int> rows, int k) {
    std::sort(rows.rbegin(), rows.rend());
    double bits = 0;
    int e = k;
    for (int r : rows) {
      const double sub = std::log2(subspace_count(e));
      if (sub <= r + k - 1) return bits + sub;
      bits += r + k - 1;
      e = std::max(0, e - r);
    }
    return bits;
  }

 private:
  std::vector<int> rows_;
  int k_;
  std::vector<int> suffix_bits_;
  std::vector<std::vector<std::vector<std::uint64_t>>> tally_;  // [dim K][dim W][free exponent]
  std::vector<std::uint64_t> exact_;                             // fully enumerated stacks by nullity

  static int eliminate(std::array<word, 64>& eq, word v) {
    while (v) {
      const auto b = static_cast<std::size_t>(63 - std::countl_zero(v));
      if (!eq[b]) {
        eq[b] = v;
        return 1;
      }
      v ^= eq[b];
    }
    return 0;
  }

  void walk(std::size_t level, const std::vector<word>& kernel) {
    const int e = static_cast<int>(kernel.size());
    if (level == rows_.size()) {
      ++exact_[static_cast<std::size_t>(e)];
      return;
    }
    if (e == 0 ||
        std::log2(subspace_count(e)) <= rows_[level] + k_ - 1) {
      sum_subspaces(level, kernel);
      return;
    }
    const int r = rows_[level];
    const word kmask = low_mask(static_cast<std::size_t>(k_));
    std::vector<word> ech, next;
    std::vector<int> pivcol;
    for (word g = 0; g < (word{1} << (r + k_ - 1)); ++g) {
      // block rows in the coordinates of K, then their common kernel
      ech.clear();
      pivcol.clear();
      for (int rho = 0; rho < r; ++rho) {
        const word row = (g >> rho) & kmask;
        word v = 0;
        for (int t = 0; t < e; ++t)
          if (std::popcount(row & kernel[static_cast<std::size_t>(t)]) & 1) v |= word{1} << t;
        for (std::size_t t = 0; t < ech.size(); ++t)
          if ((v >> pivcol[t]) & 1u) v ^= ech[t];
        if (!v) continue;
        const int p = std::countr_zero(v);
        for (auto& x : ech)
          if ((x >> p) & 1u) x ^= v;
        ech.push_back(v);
        pivcol.push_back(p);
      }
      word pivmask = 0;
      for (int p : pivcol) pivmask |= word{1} << p;
      next.clear();
      for (int f = 0; f < e; ++f) {
        if ((pivmask >> f) & 1u) continue;
        word x = kernel[static_cast<std::size_t>(f)];
        for (std::size_t t = 0; t < ech.size(); ++t)
          if ((ech[t] >> f) & 1u) x ^= kernel[static_cast<std::size_t>(pivcol[t])];
        next.push_back(x);
      }
      walk(level + 1, next);
    }
  }

  // every subspace of span(kernel), through reduced echelon coordinates
  void sum_subspaces(std::size_t level, const std::vector<word>& kernel) {
    const int e = static_cast<int>(kernel.size());
    const int free_bits = suffix_bits_[level];
    auto& bucket = tally_[static_cast<std::size_t>(e)];
    std::vector<word> w_basis;
    std::vector<int> piv;
    std::vector<std::vector<int>> freec;
    for (word pivots = 0; pivots < (word{1} << e); ++pivots) {
      const int d = std::popcount(pivots);
      piv.clear();
      for (int c = 0; c < e; ++c)
        if ((pivots >> c) & 1u) piv.push_back(c);
      freec.assign(static_cast<std::size_t>(d), {});
      int nfree = 0;
      for (int t = 0; t < d; ++t)
        for (int c = piv[static_cast<std::size_t>(t)] + 1; c < e; ++c)
          if (!((pivots >> c) & 1u)) {
            freec[static_cast<std::size_t>(t)].push_back(c);
            ++nfree;
          }
      w_basis.assign(static_cast<std::size_t>(d), 0);
      for (word f = 0; f < (word{1} << nfree); ++f) {
        int off = 0;
        for (int t = 0; t < d; ++t) {
          word w = kernel[static_cast<std::size_t>(piv[static_cast<std::size_t>(t)])];
          for (int c : freec[static_cast<std::size_t>(t)]) {
            if ((f >> off) & 1u) w ^= kernel[static_cast<std::size_t>(c)];
            ++off;
          }
          w_basis[static_cast<std::size_t>(t)] = w;
        }
        int lost = 0;
        for (std::size_t b = level; b < rows_.size(); ++b) {
          std::array<word, 64> eq{};
          for (word w : w_basis)
            for (int rho = 0; rho < rows_[b]; ++rho) lost += eliminate(eq, w << rho);
        }
        ++bucket[static_cast<std::size_t>(d)][static_cast<std::size_t>(free_bits - lost)];
      }
    }
  }

  std::vector<bigint> finish() const {
    int total_rows = 0;
    for (int r : rows_) total_rows += r;
    std::vector<bigint> by_nullity(static_cast<std::size_t>(k_ + 1));
    for (int e = 0; e <= k_; ++e) by_nullity[static_cast<std::size_t>(e)] = exact_[static_cast<std::size_t>(e)];
    for (int e = 0; e <= k_; ++e) {
      const auto& bucket = tally_[static_cast<std::size_t>(e)];
      std::vector<bigint> n(static_cast<std::size_t>(e + 1));
      for (int j = e; j >= 0; --j) {
        bigint v = 0;
        for (std::size_t x = 0; x < bucket[static_cast<std::size_t>(j)].size(); ++x)
          if (auto c = bucket[static_cast<std::size_t>(j)][x]) v += bigint(c) << static_cast<unsigned>(x);
        for (int jj = j + 1; jj <= e; ++jj) v -= n[static_cast<std::size_t>(jj)] * gaussian_binomial(jj, j);
        n[static_cast<std::size_t>(j)] = v;
        by_nullity[static_cast<std::size_t>(j)] += v;
      }
    }
    const int top = std::min(k_, total_rows);
    std::vector<bigint> out(static_cast<std::size_t>(top + 1));
    for (int r = 0; r <= k_; ++r) {
      const bigint& v = by_nullity[static_cast<std::size_t>(k_ - r)];
      if (r > top) {
        if (v != 0) throw consistency_error("kernel_histogram: rank above the row count");
        continue;
      }
      if (v < 0) throw consistency_error("kernel_histogram: negative count");
      out[static_cast<std::size_t>(r)] = v;
    }
    return out;
  }
};

inline std::vector<bigint> kernel_histogram(const std::vector<int>& rows, int k) { return kernel_walk(rows, k).run(); }

inline double kernel_cost(const std::vector<int>& rows, int k) { return kernel_walk::cost(rows, k); }

inline void check_kernel_budget(const std::vector<int>& rows, int k, int budget, const std::string& what) {
  const double c = kernel_cost(rows, k);
  if (c > std::min(budget, 62))
    throw resource_error(what + ": work 2^" + std::to_string(static_cast<int>(std::ceil(c))) + " exceeds budget " +
                         std::to_string(budget));
}

}  // namespace detail

// Same counts as gamma_bruteforce; the cost depends on k alone.
inline RankDistribution gamma_kernel(const TripleShape& sh, const run_options& opt = {}) {
  sh.validate();
  const std::vector<int> rows{sh.rows1(), sh.rows2(), sh.rows3()};
  detail::check_kernel_budget(rows, sh.k, opt.bit_budget, "gamma_kernel");
  return make_triple_distribution(sh, method::kernel, detail::kernel_histogram(rows, sh.k));
}

inline RankDistribution gamma_kernel_mixed(const MixedShape& ms, const run_options& opt = {}) {
  ms.validate();
  RankDistribution d;
  d.fam = family::mixed;
  d.mixed = ms;
  d.k = ms.k;
  d.how = method::kernel;
  std::vector<int> rows(static_cast<std::size_t>(ms.n), 1);
  rows.push_back(1 + ms.m);
  rows.push_back(1 + ms.m + ms.l);
  detail::check_kernel_budget(rows, ms.k, opt.bit_budget, "gamma_kernel_mixed");
  d.counts = detail::kernel_histogram(rows, ms.k);
  return d;
}

// Ranks of the four nested stacks [s-1,s+m-1,s+m+l-1], [s,s+m-1,s+m+l-1],
// [s,s+m,s+m+l-1], [s,s+m,s+m+l], each at width k-1 then k:
// (r1(k-1), r1(k), r2(k-1), r2(k), r3(k-1), r3(k), r4(k-1), r4(k)).
using profile_key = std::array<int, 8>;

struct JointRankProfile {
  TripleShape shape{};
  std::map<profile_key, bigint> counts;

  bigint count_of(const profile_key& p) const {
    auto it = counts.find(p);
    return it == counts.end() ? bigint(0) : it->second;
  }
  bigint total() const {
    bigint t = 0;
    for (const auto& [p, c] : counts) t += c;
    return t;
  }
};

inline JointRankProfile joint_profiles(const TripleShape& sh, const run_options& opt = {}) {
  sh.validate();
  if (sh.k < 2) throw shape_error("joint_profiles: needs k >= 2");
  detail::check_budget(sh.total_bits(), opt.bit_budget, "joint_profiles");
  const word mk = low_mask(sh.k), mk1 = low_mask(sh.k - 1);
  const word nb = word{1} << sh.beta_bits(), ng = word{1} << sh.gamma_bits();
  const int ra = sh.rows1(), rb = sh.rows2(), rg = sh.rows3();

  auto pack = [](const int* r) {
    std::uint64_t key = 0;
    for (int i = 0; i < 8; ++i) key |= static_cast<std::uint64_t>(r[i]) << (6 * i);
    return key;
  };

  int slice_bits = 0;
  while ((1u << slice_bits) < opt.workers && slice_bits < sh.alpha_bits()) ++slice_bits;
  const word slices = word{1} << slice_bits;
  const unsigned nthreads = static_cast<unsigned>(std::min<word>(slices, std::max(1u, opt.workers)));
  std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> partial(nthreads);

  auto job = [&](unsigned t) {
    auto& hist = partial[t];
    echelon_basis a1, a0, b1, b0, g1, g0, x1, x0;  // suffix 1: width k, 0: width k-1
    const int low = sh.alpha_bits() - slice_bits;
    for (word sl = t; sl < slices; sl += nthreads) {
      for (word lo = 0; lo < (word{1} << low); ++lo) {
        const word a = (sl << low) | lo;
        a1.rank = a0.rank = 0;
        for (int j = 0; j + 1 < ra; ++j) {
          a1.insert((a >> j) & mk);
          a0.insert((a >> j) & mk1);
        }
        for (word b = 0; b < nb; ++b) {
          b1.assign(a1);
          b0.assign(a0);
          for (int j = 0; j + 1 < rb; ++j) {
            b1.insert((b >> j) & mk);
            b0.insert((b >> j) & mk1);
          }
          for (word g = 0; g < ng; ++g) {
            g1.assign(b1);
            g0.assign(b0);
            for (int j = 0; j + 1 < rg; ++j) {
              g1.insert((g >> j) & mk);
              g0.insert((g >> j) & mk1);
            }
            int r[8];
            r[0] = g0.rank;
            r[1] = g1.rank;
            x1.assign(g1);
            x0.assign(g0);
            x1.insert((a >> (ra - 1)) & mk);
            x0.insert((a >> (ra - 1)) & mk1);
            r[2] = x0.rank;
            r[3] = x1.rank;
            x1.insert((b >> (rb - 1)) & mk);
            x0.insert((b >> (rb - 1)) & mk1);
            r[4] = x0.rank;
            r[5] = x1.rank;
            x1.insert((g >> (rg - 1)) & mk);
            x0.insert((g >> (rg - 1)) & mk1);
            r[6] = x0.rank;
            r[7] = x1.rank;
            ++hist[pack(r)];
          }
        }
      }
    }
  };
  if (nthreads == 1) {
    job(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(job, t);
    for (auto& th : pool) th.join();
  }

  JointRankProfile out;
  out.shape = sh;
  for (const auto& part : partial)
    for (const auto& [key, c] : part) {
      profile_key p;
      for (int i = 0; i < 8; ++i) p[static_cast<std::size_t>(i)] = static_cast<int>((key >> (6 * i)) & 63u);
      out.counts[p] += c;
    }
  return out;
}

// Carry-less product of two polynomials over F2 packed in words.
inline word clmul(word a, word b) {
  word r = 0;
  while (b) {
    if (b & 1u) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

namespace detail {

// Number of tuples (W_1..W_q), deg W_i < wbits, with sum Y_i W_i = 0.
inline std::uint64_t kernel_count(const std::vector<word>& ys, int wbits) {
  const int q = static_cast<int>(ys.size());
  const word n = word{1} << (q * wbits);
  const word mw = low_mask(wbits);
  std::uint64_t cnt = 0;
  for (word w = 0; w < n; ++w) {
    word acc = 0;
    for (int i = 0; i < q; ++i) acc ^= clmul(ys[static_cast<std::size_t>(i)], (w >> (i * wbits)) & mw);
    if (!acc) ++cnt;
  }
  return cnt;
}

// Sum over Y-tuples of the product of kernel counts for each degree cap.
inline bigint factored_solution_count(int q, int k, const std::vector<int>& caps) {
  const word ny = word{1} << (q * k);
  const word my = low_mask(k);
  std::vector<word> ys(static_cast<std::size_t>(q));
  bigint total = 0;
  for (word y = 0; y < ny; ++y) {
    for (int i = 0; i < q; ++i) ys[static_cast<std::size_t>(i)] = (y >> (i * k)) & my;
    bigint prod = 1;
    for (int c : caps) {
      prod *= kernel_count(ys, c);
      if (prod == 0) break;
    }
    total += prod;
  }
  return total;
}

}  // namespace detail

// Number of (Y_i, Z_i, U_i, V_i), i = 1..q, with deg Y_i <= k-1, deg Z_i <= s-1,
// deg U_i <= s+m-1, deg V_i <= s+m+l-1 and sum Y_i Z_i = sum Y_i U_i = sum Y_i V_i = 0.
// The three equations share only Y, so Z, U and V are enumerated separately per Y.
inline bigint solution_count_bruteforce(int q, int k, int s, int m, int l, const run_options& opt = {}) {
  if (q < 1 || k < 1 || s < 1 || m < 0 || l < 0) throw shape_error("solution_count_bruteforce: bad parameters");
  detail::check_budget(q * (k + s + (s + m) + (s + m + l)), opt.bit_budget, "solution_count_bruteforce");
  return detail::factored_solution_count(q, k, {s, s + m, s + m + l});
}

// Mixed system: deg Z_i <= m, deg U_i <= m+l and n further unknowns of degree 0,
// i.e. the degree caps that match the rows of the mixed stack.
inline bigint solution_count_bruteforce_mixed(int q, const MixedShape& ms, const run_options& opt = {}) {
  ms.validate();
  if (q < 1) throw shape_error("solution_count_bruteforce_mixed: q >= 1");
  detail::check_budget(q * (ms.k + (1 + ms.m) + (1 + ms.m + ms.l) + ms.n), opt.bit_budget,
                       "solution_count_bruteforce_mixed");
  std::vector<int> caps{1 + ms.m, 1 + ms.m + ms.l};
  for (int j = 0; j < ms.n; ++j) caps.push_back(1);
  return detail::factored_solution_count(q, ms.k, caps);
}

}  // namespace persym
