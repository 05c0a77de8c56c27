#pragma once

#include <stdexcept>
#include <string>

namespace persym {

// Dimensions or coefficient lengths do not fit the requested shape.
struct shape_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A closed form or recursion has no case covering the requested point.
struct unsupported_error : std::domain_error {
  using std::domain_error::domain_error;
};

// An exhaustive enumeration would exceed the configured bit budget.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A computed quantity violated an identity it must satisfy (non-integral
// count, negative count, ...).
struct consistency_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace persym
