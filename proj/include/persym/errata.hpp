#pragma once

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "errors.hpp"

#ifndef PERSYM_ERRATA_PATH
#define PERSYM_ERRATA_PATH "data/errata.tsv"
#endif

namespace persym {

// One printed value that disagrees with the oracle. `quantity` is gamma,
// delta (recurrence remainder) or count; `index` is the rank i, or q for counts.
struct erratum_record {
  std::string id;
  std::string citation;
  std::string quantity;
  int s = 0, m = 0, l = 0, k = 0, index = 0;
  bigint printed, oracle;
  std::string note;
};

// PERSYM_ERRATA overrides the path compiled into the build.
inline std::string default_errata_path() {
  const char* env = std::getenv("PERSYM_ERRATA");
  if (env && *env) return env;
  return PERSYM_ERRATA_PATH;
}

inline std::vector<erratum_record> parse_errata(std::istream& in) {
  std::vector<erratum_record> out;
  std::string line;
  int lineno = 0;
  bool header = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, '\t')) f.push_back(cell);
    if (header) {
      header = false;
      if (!f.empty() && f[0] == "id") continue;
    }
    if (f.size() < 11) throw shape_error("errata line " + std::to_string(lineno) + ": expected 11 or 12 fields");
    erratum_record r;
    try {
      r.id = f[0];
      r.citation = f[1];
      r.quantity = f[2];
      r.s = std::stoi(f[3]);
      r.m = std::stoi(f[4]);
      r.l = std::stoi(f[5]);
      r.k = std::stoi(f[6]);
      r.index = std::stoi(f[7]);
      r.printed = bigint(f[8]);
      r.oracle = bigint(f[9]);
      r.note = f[10];
    } catch (const std::exception& e) {
      throw shape_error("errata line " + std::to_string(lineno) + ": " + e.what());
    }
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<erratum_record> load_errata(const std::string& path = default_errata_path()) {
  std::ifstream in(path);
  if (!in) throw resource_error("cannot open errata file " + path);
  return parse_errata(in);
}

}  // namespace persym
