#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "persym/cli.hpp"

namespace {

using namespace persym;
using persym::cli::json;

struct globals {
  int budget = default_bit_budget();
  unsigned workers = default_workers();
  std::string errata = default_errata_path();
  std::string format = "json";

  run_options options() const { return {budget, workers}; }
};

void add_shape(CLI::App* cmd, cli::shape_args& a, std::optional<int>& n) {
  cmd->add_option("--s", a.s, "rows of the first block")->check(CLI::PositiveNumber);
  cmd->add_option("--m", a.m, "extra rows of the second block")->check(CLI::NonNegativeNumber);
  cmd->add_option("--l", a.l, "extra rows of the third block")->check(CLI::NonNegativeNumber);
  cmd->add_option("--k", a.k, "width")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--n", n, "unstructured rows (mixed family)")->check(CLI::NonNegativeNumber);
}

void print_error(const std::exception& e) { std::cerr << "persym: " << e.what() << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank distributions of stacked persymmetric matrices over F2"};
  app.require_subcommand(1);
  app.fallthrough();
  globals g;
  app.add_option("--budget", g.budget, "bit budget for enumeration (env PERSYM_BIT_BUDGET)")->check(CLI::PositiveNumber);
  app.add_option("--workers", g.workers, "worker threads (env PERSYM_WORKERS)")->check(CLI::PositiveNumber);
  app.add_option("--errata", g.errata, "errata file (env PERSYM_ERRATA)");

  cli::shape_args ga;
  std::optional<int> gn;
  std::string gmethod = "auto";
  auto* gamma = app.add_subcommand("gamma", "rank distribution of one shape");
  add_shape(gamma, ga, gn);
  gamma->add_option("--method", gmethod)->check(CLI::IsMember(cli::gamma_methods()));
  gamma->add_option("--format", g.format)->check(CLI::IsMember({"json", "tsv"}));

  cli::shape_args ca;
  std::optional<int> cn;
  int q = 1;
  std::string cmethod = "auto";
  std::string cformat = "text";
  auto* count = app.add_subcommand("count", "number of solutions R_q");
  count->add_option("--q", q)->required()->check(CLI::PositiveNumber);
  add_shape(count, ca, cn);
  count->add_option("--method", cmethod)->check(CLI::IsMember({"auto", "closed", "recurrence", "brute", "kernel"}));
  count->add_option("--format", cformat)->check(CLI::IsMember({"text", "json"}));

  std::string suite;
  int max_bits = 20;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("--suite", suite)->required()->check(CLI::IsMember(suites));
  verify->add_option("--max-bits", max_bits, "largest shape swept by enumeration")->check(CLI::PositiveNumber);
  verify->add_option("--workers", g.workers)->check(CLI::PositiveNumber);

  std::string table_id;
  std::optional<int> table_k;
  std::string tformat = "tsv";
  auto* table = app.add_subcommand("table", "print a stored table");
  table->add_option("id", table_id)->required();
  table->add_option("--k", table_k, "evaluate a symbolic table at this width")->check(CLI::PositiveNumber);
  table->add_option("--format", tformat)->check(CLI::IsMember({"json", "tsv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::usage;
  }

  try {
    if (*gamma) {
      ga.n = gn;
      auto r = cli::cmd_gamma(ga, gmethod, g.options(), g.errata);
      if (g.format == "tsv")
        std::cout << cli::to_tsv(r);
      else
        std::cout << cli::to_json(r).dump(2) << '\n';
      return cli::ok;
    }
    if (*count) {
      ca.n = cn;
      auto r = cli::cmd_count(ca, q, cmethod, g.options(), g.errata);
      if (cformat == "json")
        std::cout << cli::to_json(r).dump(2) << '\n';
      else
        std::cout << cli::to_text(r);
      return cli::ok;
    }
    if (*verify) {
      const run_options opt = g.options();
      std::vector<std::string> which = suite == "all" ? suite_names() : std::vector<std::string>{suite};
      json reports = json::array();
      bool all_ok = true;
      for (const auto& name : which) {
        auto rep = run_suite(name, opt, max_bits, g.errata);
        all_ok &= rep.ok();
        reports.push_back(cli::to_json(rep));
      }
      std::cout << (which.size() == 1 ? reports[0] : reports).dump(2) << '\n';
      return all_ok ? cli::ok : cli::verification_failed;
    }
    if (*table) {
      const auto* t = find_table(table_id);
      if (!t) {
        std::cerr << "persym: unknown table '" << table_id << "'; known ids:\n" << cli::table_ids();
        return cli::usage;
      }
      if (tformat == "json")
        std::cout << cli::table_json(*t, table_k).dump(2) << '\n';
      else
        std::cout << cli::table_tsv(*t, table_k);
      return cli::ok;
    }
  } catch (const consistency_error& e) {
    print_error(e);
    return cli::verification_failed;
  } catch (const std::exception& e) {
    print_error(e);
    return cli::usage;
  }
  return cli::usage;
}
