#pragma once

#include <stdexcept>
#include <string>

namespace sprime {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A structure failed an axiom or closure requirement (bad table, subset not
// an ideal, quotient by a non-ideal, ...).
struct ValidationError : Error {
  using Error::Error;
};

// A predicate was called outside its domain (improper P, S meets P, empty
// m-system). These are errors, not false verdicts.
struct PreconditionError : Error {
  using Error::Error;
};

// A constructor or enumerator would exceed the configured order cap.
struct CapExceeded : Error {
  using Error::Error;
};

// An instance/corpus document could not be read or is structurally malformed.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace sprime
