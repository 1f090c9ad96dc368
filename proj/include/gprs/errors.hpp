#pragma once

#include <stdexcept>
#include <string>

namespace gprs {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or violated precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Parameters fall outside the hypotheses of a theorem-backed criterion.
class HypothesisViolation : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Operands belong to different fields.
class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("operands belong to different fields") {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in finite field") {}
};

/// An exhaustive computation would exceed its configured cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace gprs
