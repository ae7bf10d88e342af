#ifndef HILB_ERRORS_HPP
#define HILB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hilb {

// Base class for all library errors; what() carries a human-readable message.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input (polynomial, monomial ideal, batch line, JSON).
struct SyntaxError : Error {
  std::size_t position;
  SyntaxError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// The series has a negative power-series coefficient where a nonnegative
// series is required.
struct NotNonnegative : Error {
  using Error::Error;
};

// No (n,k)-boundary presentation of the series exists.
struct NoPresentation : Error {
  using Error::Error;
};

// A reduction move applied to a presentation that does not admit it
// (non-corner-free input, or k=0 / n=d).
struct InvalidMove : Error {
  using Error::Error;
};

// delta_d is infinite: the lowest nonvanishing coefficient is negative.
struct InfiniteDelta : Error {
  InfiniteDelta()
      : Error("delta is infinite: lowest nonvanishing coefficient is negative") {}
};

// A budgeted search ran out of budget.
struct BudgetExceeded : Error {
  explicit BudgetExceeded(unsigned budget)
      : Error("search exceeded budget " + std::to_string(budget)) {}
};

// A documented precondition was violated by the caller.
struct PreconditionError : Error {
  using Error::Error;
};

// Monomial ideal exceeds the inclusion-exclusion generator cap.
struct TooManyGenerators : Error {
  TooManyGenerators(std::size_t n, std::size_t cap)
      : Error("ideal has " + std::to_string(n) + " generators; cap is " +
              std::to_string(cap)) {}
};

// File could not be opened or read.
struct IoError : Error {
  using Error::Error;
};

}  // namespace hilb

#endif
