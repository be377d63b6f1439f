#pragma once

#include <stdexcept>
#include <string>

namespace om {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input (overlapping edges, bad word, ...).
struct InvalidInput : Error {
  using Error::Error;
};

// An enumeration or search exceeded its configured budget.
struct BudgetExceeded : Error {
  using Error::Error;
};

// A runtime audit failed: a certificate did not verify, or a relation
// that must be transitive was caught violating transitivity.
struct VerificationError : Error {
  using Error::Error;
};

// The requested object cannot exist (e.g. a size-3 clique of a
// non-collectable pattern).
struct Infeasible : Error {
  using Error::Error;
};

}  // namespace om
