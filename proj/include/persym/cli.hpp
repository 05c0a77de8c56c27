#pragma once

#include <json.hpp>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "config.hpp"
#include "counting.hpp"
#include "enumeration.hpp"
#include "errata.hpp"
#include "errors.hpp"
#include "formulas.hpp"
#include "recurrence.hpp"
#include "suites.hpp"
#include "tables.hpp"

namespace persym::cli {

using json = nlohmann::ordered_json;

enum exit_code : int { ok = 0, verification_failed = 1, usage = 2 };

struct shape_args {
  int s = 1, m = 0, l = 0, k = 1;
  std::optional<int> n;  // set for the mixed family

  TripleShape triple() const { return {s, m, l, k}; }
  MixedShape mixed() const { return {*n, m, l, k}; }
};

// One gamma result as printed by the tool. Counts are decimal strings.
struct output_record {
  shape_args shape;
  std::string method;
  std::vector<std::string> counts;
  std::vector<std::string> provenance;
};

inline json to_json(const output_record& r) {
  json shape = {{"s", r.shape.s}, {"m", r.shape.m}, {"l", r.shape.l}, {"k", r.shape.k}};
  if (r.shape.n) shape["n"] = *r.shape.n;
  return {{"shape", shape}, {"method", r.method}, {"counts", r.counts}, {"provenance", r.provenance}};
}

inline output_record record_from_json(const json& j) {
  output_record r;
  const auto& sh = j.at("shape");
  r.shape.s = sh.at("s").get<int>();
  r.shape.m = sh.at("m").get<int>();
  r.shape.l = sh.at("l").get<int>();
  r.shape.k = sh.at("k").get<int>();
  if (sh.contains("n")) r.shape.n = sh.at("n").get<int>();
  r.method = j.at("method").get<std::string>();
  r.counts = j.at("counts").get<std::vector<std::string>>();
  r.provenance = j.at("provenance").get<std::vector<std::string>>();
  return r;
}

inline std::string to_tsv(const output_record& r) {
  std::ostringstream out;
  out << "s\tm\tl\tk\tn\tmethod\ti\tcount\n";
  const std::string n = r.shape.n ? std::to_string(*r.shape.n) : "-";
  for (std::size_t i = 0; i < r.counts.size(); ++i)
    out << r.shape.s << '\t' << r.shape.m << '\t' << r.shape.l << '\t' << r.shape.k << '\t' << n << '\t' << r.method
        << '\t' << i << '\t' << r.counts[i] << '\n';
  for (const auto& p : r.provenance) out << "# " << p << '\n';
  return out.str();
}

namespace detail {

inline std::vector<erratum_record> errata_or_empty(const std::string& path) {
  try {
    return load_errata(path);
  } catch (const resource_error&) {
    return {};
  }
}

inline void note_errata(const std::vector<erratum_record>& errata, const std::string& quantity, int s, int m, int l,
                        int k, int index, std::vector<std::string>& provenance) {
  for (const auto& e : errata)
    if (e.quantity == quantity && e.s == s && e.m == m && e.l == l && e.k == k && e.index == index)
      provenance.push_back("erratum " + e.id + " (" + e.citation + "): printed " + e.printed.str() + ", oracle " +
                           e.oracle.str());
}

inline RankDistribution double_distribution(int rows1, int rows2, int k, const run_options& opt, std::string& how) {
  try {
    auto d = gamma_bruteforce_double(rows1, rows2, k, opt);
    how = "double stack by brute force";
    return d;
  } catch (const resource_error&) {
  }
  const std::vector<int> rows{rows1, rows2};
  persym::detail::check_kernel_budget(rows, k, opt.bit_budget, "double stack");
  RankDistribution d;
  d.fam = family::dbl;
  d.rows1 = rows1;
  d.rows2 = rows2;
  d.k = k;
  d.how = method::kernel;
  d.counts = persym::detail::kernel_histogram(rows, k);
  how = "double stack by kernel walk";
  return d;
}

inline std::vector<std::string> decimal(const std::vector<bigint>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

}  // namespace detail

inline const std::vector<std::string>& gamma_methods() {
  static const std::vector<std::string> m = {"auto", "closed", "recurrence", "brute", "kernel"};
  return m;
}

// Distribution for a shape under one method. Throws unsupported_error or
// resource_error when the method cannot produce it.
inline RankDistribution gamma_distribution(const shape_args& a, const std::string& how, const run_options& opt,
                                           std::vector<std::string>& provenance) {
  if (a.n) {
    const MixedShape ms = a.mixed();
    ms.validate();
    if (how == "brute") return gamma_bruteforce_mixed(ms, opt);
    if (how == "kernel") return gamma_kernel_mixed(ms, opt);
    if (how == "recurrence") throw unsupported_error("the recursion applies to triple stacks only");
    std::string src;
    auto dd = detail::double_distribution(1 + ms.m, 1 + ms.m + ms.l, ms.k, opt, src);
    provenance.push_back("a-coefficient combination over the " + src);
    RankDistribution d;
    d.fam = family::mixed;
    d.mixed = ms;
    d.k = ms.k;
    d.how = method::closed;
    for (int i = 0; i <= ms.max_rank(); ++i) d.counts.push_back(gamma_mixed_from_doubles(ms, i, dd));
    return d;
  }
  const TripleShape sh = a.triple();
  sh.validate();
  if (how == "brute") return gamma_bruteforce(sh, opt);
  if (how == "kernel") return gamma_kernel(sh, opt);
  recurrence_options ro;
  ro.run = opt;
  recurrence_engine eng(ro);
  if (how == "recurrence") {
    auto d = eng.distribution(sh);
    provenance.push_back(sh.s >= 2 ? "recursion with corrected remainder" : "s = 1 leaf: closed forms or enumeration");
    return d;
  }
  std::vector<bigint> counts;
  for (int i = 0; i <= sh.max_rank(); ++i) {
    auto r = closed_form(sh, i);
    if (r) {
      counts.push_back(r->value);
      provenance.push_back("i=" + std::to_string(i) + ": " + r->source + (r->erratum.empty() ? "" : " [" + r->erratum + "]"));
      continue;
    }
    if (how == "closed") throw unsupported_error("no closed form covers i=" + std::to_string(i));
    try {
      counts.push_back(eng.gamma(sh, i));
    } catch (const resource_error& e) {
      throw resource_error(std::string(e.what()) + "; frontier " + eng.frontier());
    }
    provenance.push_back("i=" + std::to_string(i) + ": " + (sh.s >= 2 ? "recursion" : "enumeration"));
  }
  return make_triple_distribution(sh, how == "closed" ? method::closed : method::recurrence, std::move(counts));
}

inline output_record cmd_gamma(const shape_args& a, const std::string& how, const run_options& opt,
                               const std::string& errata_path = default_errata_path()) {
  output_record r;
  r.shape = a;
  r.method = how;
  auto d = gamma_distribution(a, how, opt, r.provenance);
  r.counts = detail::decimal(d.counts);
  if (!a.n) {
    auto errata = detail::errata_or_empty(errata_path);
    for (int i = 0; i < static_cast<int>(d.counts.size()); ++i)
      detail::note_errata(errata, "gamma", a.s, a.m, a.l, a.k, i, r.provenance);
  }
  return r;
}

struct count_result {
  shape_args shape;
  int q = 1;
  std::string method;
  bigint value;
  bool extrapolated = false;
  std::vector<std::string> provenance;
};

inline json to_json(const count_result& c) {
  json params = {{"q", c.q}, {"s", c.shape.s}, {"m", c.shape.m}, {"l", c.shape.l}, {"k", c.shape.k}};
  if (c.shape.n) params["n"] = *c.shape.n;
  return {{"params", params},         {"method", c.method},
          {"value", c.value.str()},   {"factored", factored_string(c.value)},
          {"extrapolated", c.extrapolated}, {"provenance", c.provenance}};
}

inline std::string to_text(const count_result& c) {
  std::ostringstream out;
  out << "R_" << c.q << " = " << c.value.str() << '\n';
  out << "    = " << factored_string(c.value) << '\n';
  if (c.extrapolated) out << "# extrapolated: l > 0 uses the l = 0 prefactor\n";
  for (const auto& p : c.provenance) out << "# " << p << '\n';
  return out.str();
}

// R_q from the rank distribution (auto) or by solving the system (brute).
inline count_result cmd_count(const shape_args& a, int q, const std::string& how, const run_options& opt,
                              const std::string& errata_path = default_errata_path()) {
  if (q < 1) throw shape_error("count: q >= 1");
  count_result c;
  c.shape = a;
  c.q = q;
  c.method = how;
  if (how == "brute") {
    if (a.n) {
      c.value = solution_count_bruteforce_mixed(q, a.mixed(), opt) * pow2(2L * q);
      c.provenance.push_back("direct enumeration times 4^q");
    } else {
      c.value = solution_count_bruteforce(q, a.k, a.s, a.m, a.l, opt);
      c.extrapolated = a.l > 0;
      c.provenance.push_back("direct enumeration");
    }
  } else if (how == "auto" || how == "closed" || how == "recurrence" || how == "kernel") {
    auto d = gamma_distribution(a, how, opt, c.provenance);
    if (a.n) {
      c.value = r_q_mixed(q, d);
    } else {
      auto e = r_q_extrapolated(q, d);
      c.value = e.value;
      c.extrapolated = e.extrapolated;
    }
  } else {
    throw unsupported_error("unknown method " + how);
  }
  if (!a.n) detail::note_errata(detail::errata_or_empty(errata_path), "count", a.s, a.m, a.l, a.k, q, c.provenance);
  return c;
}

inline json to_json(const check_report& r) {
  return {{"suite", r.name},          {"passed", r.passed},     {"failed", r.failed}, {"skipped", r.skipped},
          {"status", r.ok() ? "pass" : "fail"}, {"failures", r.failures}, {"notes", r.notes}};
}

// Rows of a printed table; with k set, each row in its window is evaluated.
inline json table_json(const golden_table& t, std::optional<int> k) {
  json rows = json::array();
  const std::optional<int> at = t.symbolic() ? k : std::optional<int>(t.k);
  for (const auto& r : t.rows) {
    json row = {{"i", r.i}, {"printed", r.expr}};
    if (!r.corrected.empty()) {
      row["corrected"] = r.corrected;
      row["erratum"] = r.erratum;
    }
    if (t.symbolic()) {
      row["k_min"] = r.kmin;
      if (r.kmax != INT_MAX) row["k_max"] = r.kmax;
    }
    if (at) {
      if (*at < r.kmin || *at > r.kmax) continue;
      row["value"] = k_expression::eval(r.value_expr(), *at).str();
    }
    rows.push_back(row);
  }
  json shape = {{"s", t.s}, {"m", t.m}, {"l", t.l}};
  if (t.mixed) shape["n"] = t.n;
  if (at) shape["k"] = *at;
  return {{"id", t.id}, {"title", t.title}, {"shape", shape}, {"rows", rows}};
}

inline std::string table_tsv(const golden_table& t, std::optional<int> k) {
  const json j = table_json(t, k);
  std::ostringstream out;
  out << "# " << t.id << ": " << t.title << '\n';
  out << "i\tprinted\tcorrected\terratum\tvalue\n";
  for (const auto& r : j.at("rows"))
    out << r.at("i").get<int>() << '\t' << r.at("printed").get<std::string>() << '\t'
        << (r.contains("corrected") ? r.at("corrected").get<std::string>() : "-") << '\t'
        << (r.contains("erratum") ? r.at("erratum").get<std::string>() : "-") << '\t'
        << (r.contains("value") ? r.at("value").get<std::string>() : "-") << '\n';
  return out.str();
}

inline std::string table_ids() {
  std::string out;
  for (const auto& t : golden_tables()) out += t.id + "\n";
  return out;
}

}  // namespace persym::cli
