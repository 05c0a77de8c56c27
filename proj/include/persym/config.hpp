#pragma once

#include <cstdlib>
#include <string>
#include <thread>

namespace persym {

constexpr int builtin_bit_budget = 24;

inline int env_int(const char* name, int fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    return std::stoi(v);
  } catch (...) {
    return fallback;
  }
}

// PERSYM_BIT_BUDGET overrides the built-in budget of 24 coefficient bits.
inline int default_bit_budget() { return env_int("PERSYM_BIT_BUDGET", builtin_bit_budget); }

// PERSYM_WORKERS overrides the hardware concurrency.
inline unsigned default_workers() {
  unsigned hw = std::thread::hardware_concurrency();
  int w = env_int("PERSYM_WORKERS", hw ? static_cast<int>(hw) : 1);
  return w < 1 ? 1u : static_cast<unsigned>(w);
}

struct run_options {
  int bit_budget = default_bit_budget();
  unsigned workers = default_workers();
};

}  // namespace persym
