#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "config.hpp"
#include "counting.hpp"
#include "enumeration.hpp"
#include "errata.hpp"
#include "f2core.hpp"
#include "formulas.hpp"
#include "recurrence.hpp"
#include "tables.hpp"

namespace persym {

struct check_report {
  std::string name;
  long passed = 0, failed = 0, skipped = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  bool expect(bool ok, const std::string& what) {
    if (ok) {
      ++passed;
    } else {
      ++failed;
      if (failures.size() < 50) failures.push_back(what);
    }
    return ok;
  }
  void skip(const std::string& what) {
    ++skipped;
    if (notes.size() < 50) notes.push_back("skipped: " + what);
  }
  bool ok() const { return failed == 0 && passed > 0; }
  void absorb(const check_report& o) {
    passed += o.passed;
    failed += o.failed;
    skipped += o.skipped;
    for (const auto& f : o.failures)
      if (failures.size() < 50) failures.push_back(o.name + ": " + f);
    for (const auto& n : o.notes)
      if (notes.size() < 50) notes.push_back(o.name + ": " + n);
  }
};

namespace detail {

inline std::string shape_text(const TripleShape& sh) {
  return "(s=" + std::to_string(sh.s) + ",m=" + std::to_string(sh.m) + ",l=" + std::to_string(sh.l) +
         ",k=" + std::to_string(sh.k) + ")";
}

inline std::string diff_text(const bigint& got, const bigint& want) { return got.str() + " != " + want.str(); }

// Every triple shape with at most max_bits coefficient bits.
inline std::vector<TripleShape> shapes_within(int max_bits, int min_k = 1) {
  std::vector<TripleShape> out;
  for (int s = 1; 3 * s <= max_bits + 3; ++s)
    for (int m = 0; 3 + 3 * s + 2 * m - 3 <= max_bits; ++m)
      for (int l = 0; 3 + 3 * s + 2 * m + l - 3 <= max_bits; ++l)
        for (int k = min_k;; ++k) {
          TripleShape sh{s, m, l, k};
          if (sh.total_bits() > max_bits) break;
          out.push_back(sh);
        }
  return out;
}

// Full distribution from the closed forms, if every rank is covered.
inline std::optional<RankDistribution> closed_distribution(const TripleShape& sh) {
  std::vector<bigint> counts;
  for (int i = 0; i <= sh.max_rank(); ++i) {
    auto r = closed_form(sh, i);
    if (!r) return std::nullopt;
    counts.push_back(r->value);
  }
  return make_triple_distribution(sh, method::closed, std::move(counts));
}

// Brute force when in budget, else the recursion.
inline RankDistribution oracle_distribution(const TripleShape& sh, const run_options& opt, recurrence_engine& eng) {
  if (sh.total_bits() <= opt.bit_budget) return gamma_bruteforce(sh, opt);
  return eng.distribution(sh);
}

inline RankDistribution mixed_from_brute_doubles(const MixedShape& ms, const run_options& opt) {
  auto dd = gamma_bruteforce_double(1 + ms.m, 1 + ms.m + ms.l, ms.k, opt);
  RankDistribution d;
  d.fam = family::mixed;
  d.mixed = ms;
  d.k = ms.k;
  d.how = method::closed;
  for (int i = 0; i <= ms.max_rank(); ++i) d.counts.push_back(gamma_mixed_from_doubles(ms, i, dd));
  return d;
}

}  // namespace detail

// Printed tables against the oracle; rows listed as errata must differ
// from the oracle in print and match it once corrected.
inline check_report suite_golden_tables(const run_options& opt) {
  check_report rep{"golden-tables"};
  recurrence_options ro;
  ro.run = opt;
  recurrence_engine eng(ro);
  for (const auto& t : golden_tables()) {
    std::vector<int> ks;
    if (t.symbolic())
      for (int k = t.kmin(); k < t.kmin() + 4; ++k) ks.push_back(k);
    else
      ks.push_back(t.k);
    for (int k : ks) {
      std::vector<bigint> oracle;
      std::string how;
      try {
        if (t.mixed) {
          MixedShape ms{t.n, t.m, t.l, k};
          try {
            oracle = detail::mixed_from_brute_doubles(ms, opt).counts;
            how = "doubles";
          } catch (const resource_error&) {
            oracle = gamma_kernel_mixed(ms, opt).counts;
            how = "kernel";
          }
        } else {
          TripleShape sh{t.s, t.m, t.l, k};
          try {
            oracle = detail::oracle_distribution(sh, opt, eng).counts;
            how = sh.total_bits() <= opt.bit_budget ? "brute" : "recurrence";
          } catch (const resource_error&) {
            auto cd = detail::closed_distribution(sh);
            if (!cd) throw;
            oracle = cd->counts;
            how = "closed";
            rep.notes.push_back(t.id + " k=" + std::to_string(k) + " checked against closed forms only");
          }
        }
      } catch (const std::exception& e) {
        rep.skip(t.id + " k=" + std::to_string(k) + ": " + e.what());
        continue;
      }
      for (const auto& r : t.rows) {
        if (k < r.kmin || k > r.kmax) continue;
        const bigint want = r.i < static_cast<int>(oracle.size()) ? oracle[static_cast<std::size_t>(r.i)] : bigint(0);
        const bigint printed = k_expression::eval(r.expr, k);
        const std::string where = t.id + " k=" + std::to_string(k) + " i=" + std::to_string(r.i) + " (" + how + ")";
        if (r.erratum.empty()) {
          rep.expect(printed == want, where + ": " + detail::diff_text(printed, want));
        } else {
          rep.expect(printed != want, where + ": " + r.erratum + " no longer disagrees");
          rep.expect(k_expression::eval(r.corrected, k) == want, where + ": corrected " + r.erratum);
        }
      }
    }
  }
  return rep;
}

// The printed solution counts and the polynomial identity for R_q(6,2).
inline check_report suite_golden_counts(const run_options& opt) {
  check_report rep{"golden-counts"};
  recurrence_options ro;
  ro.run = opt;
  recurrence_engine eng(ro);

  auto d335 = detail::oracle_distribution({3, 0, 0, 5}, opt, eng);
  bigint r335 = r_q(3, d335);
  rep.expect(r335 == detail::factored_solution_count(3, 5, {3, 3, 3}),
             "R_3(5,3) differs from direct enumeration: " + factored_string(r335));
  rep.expect(r335 == bigint(3563904) * pow2(6), "R_3(5,3) = 3563904*2^6 (E10): got " + factored_string(r335));
  rep.expect(r335 != bigint(3563904) * pow2(18), "R_3(5,3): printed 3563904*2^18 should disagree");

  auto d737 = detail::closed_distribution({3, 4, 0, 7});
  if (rep.expect(d737.has_value(), "[3,7,7]x7 closed forms incomplete")) {
    bigint r = r_q(3, *d737);
    rep.expect(r == bigint(4243395) * pow2(29), "R_3(7,3,4) = 4243395*2^29: got " + factored_string(r));
  }

  auto dm = detail::mixed_from_brute_doubles({2, 1, 3, 5}, opt);
  bigint rm = r_q_mixed(3, dm);
  rep.expect(rm == bigint(13281) * pow2(20), "mixed R_3 = 13281*2^20: got " + factored_string(rm));

  auto d226 = detail::oracle_distribution({2, 0, 0, 6}, opt, eng);
  const long coef[] = {1, 21, 1162, 20160, 258720, 1128960, 688128};
  for (int q = 1; q <= 6; ++q) {
    dyadic_sum poly;
    for (int j = 0; j <= 6; ++j) poly.add(coef[j], 6L * q - 21 + static_cast<long>(6 - j) * q);
    rep.expect(r_q(q, d226) == poly.value(), "R_q(6,2) polynomial at q=" + std::to_string(q));
  }
  return rep;
}

// Closed forms and the recursion against brute force on every small shape.
inline check_report suite_oracle(const run_options& opt, int max_bits) {
  check_report rep{"oracle"};
  recurrence_options ro;
  ro.run = opt;
  recurrence_engine eng(ro);
  run_options bo = opt;
  bo.bit_budget = std::max(opt.bit_budget, max_bits);
  for (const auto& sh : detail::shapes_within(max_bits)) {
    const auto bf = gamma_bruteforce(sh, bo);
    const std::string tag = detail::shape_text(sh);
    for (int i = 0; i <= sh.max_rank(); ++i)
      for (const auto& r : all_closed_forms({sh.s, sh.m, sh.l, sh.k, i}))
        rep.expect(r.value == bf.at(i), tag + " i=" + std::to_string(i) + " " + r.source + ": " +
                                            detail::diff_text(r.value, bf.at(i)));
    try {
      rep.expect(gamma_kernel(sh, bo).counts == bf.counts, tag + ": kernel walk differs from brute force");
    } catch (const resource_error& e) {
      rep.skip(tag + " kernel: " + e.what());
    }
    try {
      auto rc = eng.distribution(sh);
      rep.expect(rc.counts == bf.counts, tag + ": recurrence differs from brute force");
    } catch (const resource_error& e) {
      rep.skip(tag + " recurrence: " + e.what());
    }
  }
  // the mixed combination and the appended row
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 2; ++m)
      for (int l = 0; l <= 3; ++l)
        for (int k = 1; k <= 6; ++k) {
          MixedShape ms{n, m, l, k};
          if (ms.total_bits() > max_bits) continue;
          auto bf = gamma_bruteforce_mixed(ms, bo);
          auto viad = detail::mixed_from_brute_doubles(ms, bo);
          rep.expect(gamma_kernel_mixed(ms, bo).counts == bf.counts, "kernel mixed n=" + std::to_string(n));
          rep.expect(viad.counts == bf.counts, "mixed n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                                   " l=" + std::to_string(l) + " k=" + std::to_string(k));
        }
  for (int a = 1; a <= 3; ++a)
    for (int b = a; b <= 5; ++b)
      for (int k = 1; k <= 7; ++k) {
        TripleShape sh = shape_from_blocks(1, a, b, k);
        if (sh.total_bits() > max_bits) continue;
        auto dd = gamma_bruteforce_double(a, b, k, bo);
        auto bf = gamma_bruteforce(sh, bo);
        for (int i = 0; i <= sh.max_rank(); ++i)
          rep.expect(gamma_append_row(dd, k, i) == bf.at(i), "append row [" + std::to_string(a) + "," +
                                                                  std::to_string(b) + "]x" + std::to_string(k));
      }
  return rep;
}

// Both moment identities on every distribution any method produces here.
inline check_report suite_moments(const run_options& opt, int max_bits) {
  check_report rep{"moments"};
  recurrence_options ro;
  ro.run = opt;
  recurrence_engine eng(ro);
  auto check = [&](const RankDistribution& d, const std::string& what) {
    auto mr = moment_check(d);
    rep.expect(mr.pass, what + ": residuals " + mr.total_residual.str() + ", " + mr.weighted_residual.str());
  };
  run_options bo = opt;
  bo.bit_budget = std::max(opt.bit_budget, max_bits);
  for (const auto& sh : detail::shapes_within(max_bits)) {
    check(gamma_bruteforce(sh, bo), "brute " + detail::shape_text(sh));
    if (auto cd = detail::closed_distribution(sh)) check(*cd, "closed " + detail::shape_text(sh));
    try {
      check(eng.distribution(sh), "recurrence " + detail::shape_text(sh));
    } catch (const resource_error&) {
    }
  }
  for (int s = 1; s <= 4; ++s)
    for (int m = 0; m <= 4; ++m)
      for (int k = 1; k <= 3 * s + 2 * m + 3; ++k) {
        TripleShape sh{s, m, 0, k};
        if (auto cd = detail::closed_distribution(sh)) check(*cd, "closed " + detail::shape_text(sh));
        if (s >= 2 && k <= 3 * s + 2 * m + 2) {
          try {
            check(eng.distribution(sh), "recurrence " + detail::shape_text(sh));
          } catch (const resource_error&) {
          }
        }
      }
  for (int m = 0; m <= 3; ++m)
    for (int l = 0; l <= 4; ++l)
      for (int k = 1; k <= 12; ++k) {
        TripleShape sh{1, m, l, k};
        if (auto cd = detail::closed_distribution(sh)) check(*cd, "closed " + detail::shape_text(sh));
      }
  return rep;
}

// Gamma_i = 105*2^(4i-6) - 21*2^(3i-5) for i <= s-1 on shapes with s >= 4.
inline check_report suite_low_rank(const run_options& opt, int samples = 30) {
  check_report rep{"low-rank"};
  recurrence_options ro;
  ro.run = opt;
  recurrence_engine eng(ro);
  int done = 0;
  for (int s = 4; s <= 7 && done < samples; ++s)
    for (int m = 0; m <= 3 && done < samples; ++m)
      for (int l = 0; l <= 3 && done < samples; ++l) {
        TripleShape sh{s, m, l, s + m % 2 + l % 2};
        bool all = true;
        for (int i = 0; i <= std::min(s - 1, sh.k - 1); ++i) {
          try {
            bigint g = eng.gamma(sh, i);
            all &= rep.expect(g == gamma_low(i), detail::shape_text(sh) + " i=" + std::to_string(i) + ": " +
                                                     detail::diff_text(g, gamma_low(i)));
          } catch (const resource_error& e) {
            rep.skip(detail::shape_text(sh) + ": " + e.what());
            all = false;
            break;
          }
        }
        if (all) ++done;
      }
  rep.expect(done >= samples, "only " + std::to_string(done) + " shapes sampled");
  return rep;
}

// The recursion against every l = 0 closed form, s <= 4, m <= 3, k <= 3s+2m+2.
inline check_report suite_recurrence(const run_options& opt) {
  check_report rep{"recurrence"};
  recurrence_options ro;
  ro.run = opt;
  recurrence_engine eng(ro);
  for (int s = 2; s <= 4; ++s)
    for (int m = 0; m <= 3; ++m)
      for (int k = 1; k <= 3 * s + 2 * m + 2; ++k) {
        TripleShape sh{s, m, 0, k};
        for (int i = 0; i <= sh.max_rank(); ++i) {
          auto forms = all_closed_forms({s, m, 0, k, i});
          if (forms.empty()) continue;
          bigint v;
          try {
            v = eng.gamma(sh, i);
          } catch (const resource_error& e) {
            rep.expect(false, detail::shape_text(sh) + " i=" + std::to_string(i) + ": " + e.what());
            continue;
          }
          for (const auto& f : forms)
            rep.expect(f.value == v, detail::shape_text(sh) + " i=" + std::to_string(i) + " " + f.source + ": " +
                                         detail::diff_text(f.value, v));
        }
      }
  // remainder stability in k
  for (int s = 2; s <= 3; ++s)
    for (int m = 0; m <= 2; ++m)
      for (int l = 0; l <= 2; ++l) {
        const int n = 3 * s + 2 * m + l;
        for (int i = 0; i <= n; ++i)
          for (int k = std::max(1, i); k <= n + 2; ++k) {
            int ref_k = i <= std::min(n - 4, k - 1) ? i + 1 : (i >= n - 3 ? i : -1);
            if (ref_k < 1 || ref_k == k) continue;
            if (i <= n - 4 && i > k - 1) continue;
            try {
              rep.expect(eng.delta(s, m, l, k, i) == eng.delta(s, m, l, ref_k, i),
                         "delta k-stability s=" + std::to_string(s) + " m=" + std::to_string(m) +
                             " l=" + std::to_string(l) + " i=" + std::to_string(i) + " k=" + std::to_string(k));
            } catch (const resource_error& e) {
              rep.skip(std::string("delta: ") + e.what());
            }
          }
      }
  return rep;
}

// a_j^(n) two ways, the three-term combination, and the unstructured count.
inline check_report suite_a_coefficients(const run_options& opt) {
  check_report rep{"a-coefficients"};
  for (int n = 1; n <= 12; ++n)
    for (int j = 0; j <= n; ++j)
      rep.expect(a_coeff(n, j) == a_coeff_explicit(n, j), "a_" + std::to_string(j) + "^(" + std::to_string(n) + ")");
  for (int n = 1; n <= 12; ++n)
    for (int i = 0; i <= n + 2; ++i)
      rep.expect(a_combination(n, i) == gauss_ratio(n + 2, i, i),
                 "combination n=" + std::to_string(n) + " i=" + std::to_string(i));
  for (int rows = 2; rows <= 6; ++rows)
    for (int cols = 1; cols <= 6; ++cols) {
      MixedShape ms{rows - 2, 0, 0, cols};
      auto dd = gamma_bruteforce_double(1, 1, cols, opt);
      for (int i = 0; i <= std::min(rows, cols); ++i)
        rep.expect(count_rank_unstructured(rows, cols, i) == gamma_mixed_from_doubles(ms, i, dd),
                   "unstructured " + std::to_string(rows) + "x" + std::to_string(cols) + " i=" + std::to_string(i));
    }
  return rep;
}

// Character sums at random points, and the power sum over all points.
inline check_report suite_expsum(const run_options& opt, int points = 1000) {
  check_report rep{"expsum"};
  std::mt19937_64 rng(20240601);
  auto bits = [&](int n) {
    bitseq b(static_cast<std::size_t>(n));
    for (auto& x : b) x = static_cast<std::uint8_t>(rng() & 1u);
    return b;
  };
  run_options eo = opt;
  eo.bit_budget = std::max(opt.bit_budget, 16);
  int done = 0;
  while (done < points) {
    TripleShape sh{1 + static_cast<int>(rng() % 2), static_cast<int>(rng() % 3), static_cast<int>(rng() % 3),
                   1 + static_cast<int>(rng() % 4)};
    if (sh.k + sh.s + (sh.s + sh.m) + (sh.s + sh.m + sh.l) > 16) continue;
    CoefficientTriple p{bits(sh.alpha_bits()), bits(sh.beta_bits()), bits(sh.gamma_bits())};
    const int r = static_cast<int>(rank(stack_triple(p, sh)));
    rep.expect(exp_sum_direct(p, sh, eo) == exp_sum_from_rank(sh, r), "point on " + detail::shape_text(sh));
    ++done;
  }
  for (int t = 0; t < 100; ++t) {
    MixedShape ms{static_cast<int>(rng() % 3), static_cast<int>(rng() % 2), static_cast<int>(rng() % 3),
                  1 + static_cast<int>(rng() % 3)};
    if (ms.k + ms.n + (1 + ms.m) + (1 + ms.m + ms.l) > 16) continue;
    BitMatrix g(static_cast<std::size_t>(ms.n), static_cast<std::size_t>(ms.k));
    for (int i = 0; i < ms.n; ++i)
      for (int j = 0; j < ms.k; ++j) g.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), rng() & 1u);
    auto tt = bits(ms.t_bits()), ee = bits(ms.eta_bits());
    const int r = static_cast<int>(rank(stack_mixed(g, tt, ee, ms)));
    rep.expect(exp_sum_mixed(g, tt, ee, ms, eo) == exp_sum_mixed_from_rank(ms, r), "mixed point");
  }
  run_options po = opt;
  po.bit_budget = std::max(opt.bit_budget, 20);
  for (int k = 1; k <= 3; ++k) {
    TripleShape sh{1, 0, 0, k};
    auto dist = gamma_bruteforce(sh, po);
    for (int q = 1; q <= 3; ++q)
      rep.expect(power_sum_direct(sh, q, po) == r_q(q, dist),
                 "power sum k=" + std::to_string(k) + " q=" + std::to_string(q));
  }
  return rep;
}

// The forbidden (j, j+1) profile never occurs.
inline check_report suite_profiles(const run_options& opt, int max_bits = 18) {
  check_report rep{"profiles"};
  run_options bo = opt;
  bo.bit_budget = std::max(opt.bit_budget, max_bits);
  for (const auto& sh : detail::shapes_within(max_bits, 2)) {
    auto jp = joint_profiles(sh, bo);
    rep.expect(jp.total() == pow2(sh.total_bits()), detail::shape_text(sh) + ": profile total");
    const int top = std::min(sh.total_rows() - 3, sh.k - 2);
    for (int j = 0; j <= top; ++j) {
      profile_key p{j, j + 1, j, j + 1, j, j + 1, j, j + 1};
      rep.expect(jp.count_of(p) == 0, detail::shape_text(sh) + ": profile j=" + std::to_string(j));
    }
  }
  return rep;
}

// Direct enumeration of solutions against R_q from the distribution.
inline check_report suite_solutions(const run_options& opt) {
  check_report rep{"solutions"};
  struct row {
    int q, k, s, m, l;
  };
  const row rows[] = {{1, 1, 1, 0, 0}, {1, 2, 1, 0, 0}, {2, 2, 1, 0, 0}, {2, 1, 1, 1, 0}, {2, 2, 1, 0, 1},
                      {1, 3, 1, 1, 1}, {3, 2, 1, 0, 0}, {2, 3, 1, 0, 0}};
  run_options bo = opt;
  bo.bit_budget = std::max(opt.bit_budget, 24);
  for (const auto& r : rows) {
    TripleShape sh{r.s, r.m, r.l, r.k};
    auto dist = gamma_bruteforce(sh, bo);
    bigint direct = solution_count_bruteforce(r.q, r.k, r.s, r.m, r.l, bo);
    bigint via = r_q_extrapolated(r.q, dist).value;
    rep.expect(direct == via, "q=" + std::to_string(r.q) + " " + detail::shape_text(sh) + ": " +
                                  detail::diff_text(direct, via));
    if (r.q == 1) rep.expect(via == pow2(sh.total_rows()) + pow2(sh.k) - 1, "q=1 identity " + detail::shape_text(sh));
  }
  for (int q = 1; q <= 2; ++q) {
    MixedShape ms{1, 0, 1, 2};
    auto d = gamma_bruteforce_mixed(ms, bo);
    rep.expect(r_q_mixed(q, d) == solution_count_bruteforce_mixed(q, ms, bo) * pow2(2L * q),
               "mixed q=" + std::to_string(q));
  }
  return rep;
}

// 21/64 for square shapes.
inline check_report suite_invertible(const run_options& opt) {
  check_report rep{"invertible"};
  for (int s = 1; s <= 4; ++s)
    for (int m = 2; m <= 5; ++m) {
      auto f = invertible_fraction(s, m, opt);
      rep.expect(f.num == 21 && f.den == 64, "s=" + std::to_string(s) + " m=" + std::to_string(m) + ": " + f.str());
    }
  run_options bo = opt;
  bo.bit_budget = std::max(opt.bit_budget, 21);
  for (auto [s, m] : {std::pair{1, 0}, {1, 1}, {2, 0}}) {
    auto f = invertible_fraction(s, m, bo);
    rep.expect(f.source == "brute", "s=" + std::to_string(s) + " m=" + std::to_string(m) + " not enumerated");
    rep.expect(f.num == 21 && f.den == 64, "s=" + std::to_string(s) + " m=" + std::to_string(m) + ": " + f.str());
  }
  return rep;
}

// Both sides of every reduction, by brute force where possible and by the
// closed forms at larger k.
inline check_report suite_reductions(const run_options& opt, int max_bits) {
  check_report rep{"reductions"};
  run_options bo = opt;
  bo.bit_budget = std::max(opt.bit_budget, max_bits);
  for (const auto& sh : detail::shapes_within(max_bits)) {
    std::optional<RankDistribution> lhs;
    for (int i = 0; i <= sh.max_rank(); ++i)
      for (const auto& red : reductions(sh, i)) {
        if (red.target.total_bits() > max_bits) continue;
        if (!lhs) lhs = gamma_bruteforce(sh, bo);
        auto rhs = gamma_bruteforce(red.target, bo);
        rep.expect(lhs->at(i) == (rhs.at(red.i) << static_cast<unsigned>(4 * red.e)),
                   red.rule + " " + detail::shape_text(sh) + " i=" + std::to_string(i));
      }
  }
  long symbolic = 0;
  auto closed_side = [](const TripleShape& sh, int i) -> std::optional<bigint> {
    auto r = closed_form(sh, i);
    if (!r) return std::nullopt;
    return r->value;
  };
  for (int s = 1; s <= 4; ++s)
    for (int m = 0; m <= 4; ++m)
      for (int l = 0; l <= (s == 1 ? 5 : 0); ++l)
        for (int k = 1; k <= 3 * s + 2 * m + l + 6; ++k) {
          TripleShape sh{s, m, l, k};
          for (int i = 0; i <= sh.max_rank(); ++i)
            for (const auto& red : reductions(sh, i)) {
              auto a = closed_side(sh, i);
              auto b = closed_side(red.target, red.i);
              if (!a || !b) continue;
              ++symbolic;
              rep.expect(*a == (*b << static_cast<unsigned>(4 * red.e)),
                         red.rule + " closed " + detail::shape_text(sh) + " i=" + std::to_string(i));
            }
        }
  rep.notes.push_back("closed-form spot checks: " + std::to_string(symbolic));
  return rep;
}

// Every errata row reproduces: printed differs, the oracle matches, and the
// corrected path in the library returns the oracle.
inline check_report suite_errata(const run_options& opt, const std::string& path = default_errata_path()) {
  check_report rep{"errata"};
  std::vector<erratum_record> rows;
  try {
    rows = load_errata(path);
  } catch (const std::exception& e) {
    rep.expect(false, e.what());
    return rep;
  }
  recurrence_options ro;
  ro.run = opt;
  ro.run.bit_budget = std::max(opt.bit_budget, 22);
  recurrence_engine eng(ro);
  for (const auto& r : rows) {
    const std::string tag = r.id + " " + r.citation;
    rep.expect(r.printed != r.oracle, tag + ": printed equals oracle");
    TripleShape sh{r.s, r.m, r.l, r.k};
    try {
      if (r.quantity == "gamma") {
        auto d = detail::oracle_distribution(sh, ro.run, eng);
        rep.expect(d.at(r.index) == r.oracle, tag + ": oracle " + detail::diff_text(d.at(r.index), r.oracle));
        if (r.citation.rfind("table/", 0) == 0) {
          const auto* t = find_table(r.citation.substr(6));
          if (rep.expect(t != nullptr, tag + ": unknown table")) {
            const table_row* row = nullptr;
            for (const auto& x : t->rows)
              if (x.i == r.index && x.erratum == r.id && r.k >= x.kmin && r.k <= x.kmax) row = &x;
            if (rep.expect(row != nullptr, tag + ": table row not marked")) {
              rep.expect(k_expression::eval(row->expr, r.k) == r.printed, tag + ": printed row");
              rep.expect(k_expression::eval(row->corrected, r.k) == r.oracle, tag + ": corrected row");
            }
          }
        } else {
          bool found = false;
          for (auto f : families_for(r.s, r.m, r.l))
            for (const auto& c : cases_of(f))
              if (c.source == r.citation && c.applies({r.s, r.m, r.l, r.k, r.index})) {
                found = true;
                rep.expect(c.eval({r.s, r.m, r.l, r.k, r.index}) == r.oracle, tag + ": corrected case");
                rep.expect(c.erratum && r.id == c.erratum, tag + ": case not marked");
              }
          rep.expect(found, tag + ": no case with this citation covers the point");
        }
      } else if (r.quantity == "delta") {
        auto d = gamma_bruteforce(sh, ro.run);
        const int a = sh.s, b = sh.s + sh.m, c = sh.s + sh.m + sh.l, k = sh.k, i = r.index;
        auto g = [&](int x, int y, int z, int j) -> bigint {
          if (j < 0) return 0;
          return gamma_bruteforce(shape_from_blocks(x, y, z, k), ro.run).at(j);
        };
        bigint rest = 2 * g(a - 1, b, c, i - 1) + 4 * g(a, b - 1, c, i - 1) + 8 * g(a, b, c - 1, i - 1) -
                      8 * g(a - 1, b - 1, c, i - 2) - 16 * g(a - 1, b, c - 1, i - 2) -
                      32 * g(a, b - 1, c - 1, i - 2) + 64 * g(a - 1, b - 1, c - 1, i - 3);
        const bigint needed = d.at(i) - rest;
        rep.expect(needed == r.oracle, tag + ": oracle " + detail::diff_text(needed, r.oracle));
        rep.expect(eng.delta(sh.s, sh.m, sh.l, k, i) == r.oracle, tag + ": corrected remainder");
        recurrence_options po = ro;
        po.delta = delta_variant::printed;
        recurrence_engine printed(po);
        rep.expect(printed.delta(sh.s, sh.m, sh.l, k, i) == r.printed, tag + ": printed remainder");
      } else if (r.quantity == "count") {
        bigint direct = detail::factored_solution_count(r.index, r.k, {r.s, r.s + r.m, r.s + r.m + r.l});
        rep.expect(direct == r.oracle, tag + ": oracle " + detail::diff_text(direct, r.oracle));
        rep.expect(r_q(r.index, detail::oracle_distribution(sh, ro.run, eng)) == r.oracle, tag + ": r_q");
      } else {
        rep.expect(false, tag + ": unknown quantity " + r.quantity);
      }
    } catch (const std::exception& e) {
      rep.expect(false, tag + ": " + e.what());
    }
  }
  rep.expect(rows.size() >= 13, "errata file has " + std::to_string(rows.size()) + " rows");
  return rep;
}

// Suite names accepted by the CLI.
inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> n = {"golden", "oracle", "identities", "recurrence",
                                             "expsum", "profiles", "errata"};
  return n;
}

inline check_report run_suite(const std::string& name, const run_options& opt, int max_bits,
                              const std::string& errata_path = default_errata_path()) {
  check_report all{name};
  auto add = [&](const check_report& r) { all.absorb(r); };
  if (name == "golden") {
    add(suite_golden_tables(opt));
    add(suite_golden_counts(opt));
  } else if (name == "oracle") {
    add(suite_oracle(opt, max_bits));
    add(suite_solutions(opt));
  } else if (name == "identities") {
    add(suite_moments(opt, max_bits));
    add(suite_low_rank(opt));
    add(suite_a_coefficients(opt));
    add(suite_invertible(opt));
    add(suite_reductions(opt, max_bits));
  } else if (name == "recurrence") {
    add(suite_recurrence(opt));
  } else if (name == "expsum") {
    add(suite_expsum(opt));
  } else if (name == "profiles") {
    add(suite_profiles(opt, std::min(max_bits, 18)));
  } else if (name == "errata") {
    add(suite_errata(opt, errata_path));
  } else {
    throw unsupported_error("unknown suite " + name);
  }
  return all;
}

}  // namespace persym
