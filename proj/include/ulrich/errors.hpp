#pragma once

#include <stdexcept>
#include <string>

namespace ulrich {

/// Base of every error raised by the engines.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial, tag, or graph input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operands built over different ambient rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// A documented precondition did not hold (zero polynomial, bad index, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Catalog parameters outside the family's admissible range.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// m-adic truncation did not stabilize within the configured budget.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

/// Operation not defined for this presentation (e.g. trace for CM type 3).
class UnsupportedType : public Error {
 public:
  using Error::Error;
};

/// A computed object does not have the shape the caller relies on.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A reduction search ran out of candidates where one is required.
class SearchFailure : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check disagreed; indicates an engine bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace ulrich
