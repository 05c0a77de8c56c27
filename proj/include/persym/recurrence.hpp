#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "config.hpp"
#include "enumeration.hpp"
#include "errors.hpp"
#include "f2core.hpp"
#include "formulas.hpp"

namespace persym {

// Sorted block sizes r1 <= r2 <= r3, width and rank.
struct ShapeKey {
  std::array<int, 3> rows{};
  int k = 0, i = 0;

  static ShapeKey of(int a, int b, int c, int k, int i) {
    ShapeKey key{{a, b, c}, k, i};
    std::sort(key.rows.begin(), key.rows.end());
    return key;
  }
  TripleShape shape() const { return {rows[0], rows[1] - rows[0], rows[2] - rows[1], k}; }
  auto operator<=>(const ShapeKey&) const = default;
};

// Which expression to use for the remainder term.
enum class delta_variant { corrected, printed };

struct recurrence_options {
  run_options run{};
  bool closed_first = false;  // every node tries the closed forms before recursing
  delta_variant delta = delta_variant::corrected;
};

class recurrence_engine {
 public:
  explicit recurrence_engine(recurrence_options opt = {}) : opt_(opt) {}

  const recurrence_options& options() const { return opt_; }

  bigint gamma(const TripleShape& sh, int i) {
    sh.validate();
    return gamma_key(ShapeKey::of(sh.s, sh.s + sh.m, sh.s + sh.m + sh.l, sh.k, i));
  }

  bigint gamma_blocks(int a, int b, int c, int k, int i) { return gamma_key(ShapeKey::of(a, b, c, k, i)); }

  RankDistribution distribution(const TripleShape& sh) {
    sh.validate();
    std::vector<bigint> counts(sh.max_rank() + 1);
    for (int i = 0; i <= sh.max_rank(); ++i) counts[i] = gamma(sh, i);
    return make_triple_distribution(sh, method::recurrence, std::move(counts));
  }

  // Remainder term for the shape (s, m, l) at width k, rank i (s >= 2).
  bigint delta(int s, int m, int l, int k, int i) {
    if (s < 2) throw unsupported_error("delta: the remainder is only defined for s >= 2");
    if (k < 1 || i < 0) throw unsupported_error("delta: need k >= 1, i >= 0");
    const int np = 3 * (s - 1) + 2 * m + l;  // rows of the reduced shape
    auto g = [&](int j) -> bigint {
      if (j < 1 || j > np) return 0;
      return gamma_blocks(s - 1, s - 1 + m, s - 1 + m + l, j, j);
    };
    if (opt_.delta == delta_variant::printed) return delta_printed(np, k, i, g);
    auto sigma = [&](int j) -> bigint {
      if (j < 0) return 0;
      if (j == 0) return 1;
      if (j > std::min(k, np)) return 0;
      bigint v = 8 * g(j);
      if (j + 1 <= k) v -= g(j + 1);
      return v;
    };
    return sigma(i) - 7 * sigma(i - 1) + 14 * sigma(i - 2) - 8 * sigma(i - 3);
  }

  std::size_t memo_size() const {
    std::shared_lock lock(mu_);
    return memo_.size();
  }

  // Shape at which the last failed evaluation stopped.
  const std::string& frontier() const { return frontier_; }

 private:
  template <class G>
  static bigint delta_printed(int np, int k, int i, G&& g) {
    const int n = np + 3;
    if (i == 0) return 1;
    if (i == 1) return k >= 2 ? 8 * g(1) - g(2) - 7 : 8 * g(1) - 7;
    if (i == 2) return 15 * g(2) - 56 * g(1) + 14 - (k >= 3 ? g(3) : bigint(0));
    if (i == 3) return 15 * g(3) - 80 * g(2) + 112 * g(1) - 8 - (k >= 4 ? g(4) : bigint(0));
    if (i <= n - 4) return 15 * g(i) - 80 * g(i - 1) + 120 * g(i - 2) - 64 * g(i - 3) - (k >= i + 1 ? g(i + 1) : bigint(0));
    if (i == n - 3) return 15 * g(np) - 80 * g(np - 1) + 120 * g(np - 2) - 64 * g(np - 3);
    if (i == n - 2) return -80 * g(np) + 120 * g(np - 1) - 64 * g(np - 2);
    if (i == n - 1) return 120 * g(np) - 64 * g(np - 1);
    if (i == n) return -64 * g(np);
    return 0;
  }

  std::optional<bigint> lookup(const ShapeKey& key) const {
    std::shared_lock lock(mu_);
    auto it = memo_.find(key);
    if (it == memo_.end()) return std::nullopt;
    return it->second;
  }

  bigint store(const ShapeKey& key, bigint v) {
    if (v < 0) throw consistency_error("negative count at " + describe(key));
    std::unique_lock lock(mu_);
    memo_.emplace(key, v);
    return v;
  }

  void store_if_absent(const ShapeKey& key, const bigint& v) {
    std::unique_lock lock(mu_);
    memo_.emplace(key, v);
  }

  static std::string describe(const ShapeKey& key) {
    return "[" + std::to_string(key.rows[0]) + "," + std::to_string(key.rows[1]) + "," +
           std::to_string(key.rows[2]) + "]x" + std::to_string(key.k) + " i=" + std::to_string(key.i);
  }

  bigint gamma_key(const ShapeKey& key) {
    if (key.i < 0 || key.k < 1) return 0;
    const int total = key.rows[0] + key.rows[1] + key.rows[2];
    if (key.i > std::min(key.k, total)) return 0;
    if (key.i == 0) return 1;
    if (auto hit = lookup(key)) return *hit;
    return store(key, compute(key));
  }

  bigint compute(const ShapeKey& key) {
    const auto [a, b, c] = key.rows;
    const int k = key.k, i = key.i;
    const TripleShape sh = key.shape();
    if (opt_.closed_first || a == 1)
      if (auto r = closed_form(sh, i)) return r->value;
    if (a >= 2) {
      bigint v = 2 * gamma_blocks(a - 1, b, c, k, i - 1) + 4 * gamma_blocks(a, b - 1, c, k, i - 1) +
                 8 * gamma_blocks(a, b, c - 1, k, i - 1);
      v -= 8 * gamma_blocks(a - 1, b - 1, c, k, i - 2) + 16 * gamma_blocks(a - 1, b, c - 1, k, i - 2) +
           32 * gamma_blocks(a, b - 1, c - 1, k, i - 2);
      v += 64 * gamma_blocks(a - 1, b - 1, c - 1, k, i - 3);
      v += delta(a, b - a, c - b, k, i);
      return v;
    }
    // a == 1 outside every closed-form window: one free row on top of a double stack
    if (2 * k + b + c - 2 <= opt_.run.bit_budget) {
      const auto& dd = double_dist(b, c, k);
      return gamma_append_row(dd, k, i);
    }
    if (detail::kernel_cost({a, b, c}, k) <= std::min(opt_.run.bit_budget, 62)) {
      auto kd = gamma_kernel(sh, opt_.run);
      for (int j = 1; j <= kd.max_rank(); ++j) store_if_absent(ShapeKey::of(a, b, c, k, j), kd.at(j));
      return kd.at(i);
    }
    frontier_ = describe(key);
    throw resource_error("no closed form and enumeration exceeds budget at " + frontier_);
  }

  const RankDistribution& double_dist(int b, int c, int k) {
    std::array<int, 3> key{b, c, k};
    {
      std::shared_lock lock(mu_);
      auto it = doubles_.find(key);
      if (it != doubles_.end()) return it->second;
    }
    RankDistribution d = gamma_bruteforce_double(b, c, k, opt_.run);
    std::unique_lock lock(mu_);
    return doubles_.emplace(key, std::move(d)).first->second;
  }

  recurrence_options opt_;
  mutable std::shared_mutex mu_;
  std::map<ShapeKey, bigint> memo_;
  std::map<std::array<int, 3>, RankDistribution> doubles_;
  std::string frontier_;
};

// Full distribution by the recursion, s = 1 nodes served by closed forms or
// double-block enumeration.
inline RankDistribution gamma_recursive(const TripleShape& sh, const recurrence_options& opt = {}) {
  recurrence_engine eng(opt);
  return eng.distribution(sh);
}

inline bigint delta_remainder(int s, int m, int l, int k, int i, const recurrence_options& opt = {}) {
  recurrence_engine eng(opt);
  return eng.delta(s, m, l, k, i);
}

struct moment_report {
  bool pass = false;
  bigint total_residual;     // sum of counts minus the expected total
  bigint weighted_residual;  // scaled weighted sum minus its expected value
};

// Checks the two moment identities of a triple distribution exactly.
inline moment_report moment_check(const RankDistribution& dist) {
  if (dist.fam != family::triple) throw shape_error("moment_check: needs a triple distribution");
  const TripleShape& sh = dist.triple;
  const int I = sh.max_rank();
  bigint total = 0, weighted = 0;
  for (int i = 0; i < static_cast<int>(dist.counts.size()); ++i) {
    total += dist.counts[i];
    if (i <= I) weighted += dist.counts[i] << static_cast<unsigned>(I - i);
  }
  const long N = 3 * sh.s + 2 * sh.m + sh.l;
  moment_report r;
  r.total_residual = total - pow2(3L * sh.k + N - 3);
  dyadic_sum expect{{1, I + 2L * sh.k + N - 3}, {1, I + 3L * sh.k - 3}, {-1, I + 2L * sh.k - 3}};
  r.weighted_residual = weighted - expect.value();
  r.pass = r.total_residual == 0 && r.weighted_residual == 0;
  return r;
}

}  // namespace persym
