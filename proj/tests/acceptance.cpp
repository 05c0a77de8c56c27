// Runs every acceptance criterion and prints one PASS/FAIL line each.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "persym/suites.hpp"

namespace {

using namespace persym;

// All comparisons are exact integer equality; these only size the sweeps.
constexpr int bit_budget = 20;
constexpr int oracle_max_bits = 20;
constexpr int profile_max_bits = 18;
constexpr int low_rank_samples = 30;
constexpr int expsum_points = 1000;

struct criterion {
  const char* title;
  std::function<check_report(const run_options&)> run;
};

check_report combine(std::string name, std::initializer_list<check_report> parts) {
  check_report all{std::move(name)};
  for (const auto& p : parts) all.absorb(p);
  return all;
}

}  // namespace

int main() {
  run_options opt;
  opt.bit_budget = bit_budget;
  const std::vector<criterion> criteria = {
      {"golden tables",
       [](const run_options& o) { return combine("golden", {suite_golden_tables(o), suite_errata(o)}); }},
      {"solution counts", [](const run_options& o) { return suite_golden_counts(o); }},
      {"oracle equivalence", [](const run_options& o) { return suite_oracle(o, oracle_max_bits); }},
      {"moment identities", [](const run_options& o) { return suite_moments(o, oracle_max_bits); }},
      {"low-rank universality", [](const run_options& o) { return suite_low_rank(o, low_rank_samples); }},
      {"recurrence cross-check", [](const run_options& o) { return suite_recurrence(o); }},
      {"a-coefficients", [](const run_options& o) { return suite_a_coefficients(o); }},
      {"exponential-sum identity", [](const run_options& o) { return suite_expsum(o, expsum_points); }},
      {"profile vanishing", [](const run_options& o) { return suite_profiles(o, profile_max_bits); }},
      {"direct solution enumeration", [](const run_options& o) { return suite_solutions(o); }},
      {"invertibility fraction", [](const run_options& o) { return suite_invertible(o); }},
      {"reduction formulas", [](const run_options& o) { return suite_reductions(o, oracle_max_bits); }},
  };
  int failed = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    check_report rep{criteria[n].title};
    try {
      rep = criteria[n].run(opt);
    } catch (const std::exception& e) {
      rep.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!rep.ok()) ++failed;
    char line[256];
    std::snprintf(line, sizeof line, "%s %2zu. %-28s checks=%ld failed=%ld skipped=%ld (%.1fs)",
                  rep.ok() ? "PASS" : "FAIL", n + 1, criteria[n].title, rep.passed, rep.failed, rep.skipped, secs);
    std::cout << line << '\n';
    for (const auto& f : rep.failures) std::cout << "       " << f << '\n';
    std::cout.flush();
  }
  return failed == 0 ? 0 : 1;
}
