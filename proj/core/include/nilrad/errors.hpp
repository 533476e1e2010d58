#pragma once

#include <stdexcept>

namespace nilrad {

// Common base so callers can catch the whole family at once. The CLI maps
// InputError/AdmissibilityError to exit code 2.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error { using Error::Error; };      // size or field mismatch
struct AdmissibilityError : Error { using Error::Error; };  // corner/shape condition violated
struct ConstraintError : Error { using Error::Error; };     // infeasible sampling constraint
struct ClosureError : Error { using Error::Error; };        // basis not closed under bracket
struct UnsupportedError : Error { using Error::Error; };    // call outside the operation's contract
struct InputError : Error { using Error::Error; };          // malformed external input
struct InternalError : Error { using Error::Error; };       // broken invariant; indicates a bug

}  // namespace nilrad
