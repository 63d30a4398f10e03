#pragma once

#include <stdexcept>
#include <string>

namespace zeta_arr {

// Base class for every error raised by the library. The CLI maps the
// subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (JSON syntax, missing fields, bad rational literal).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A mathematical precondition does not hold: loops, rank deficiency,
// weight outside the Bergman fan, bad prime, length mismatch, ...
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class BadPrimeError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Enumeration would exceed the configured jet budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace zeta_arr
