#pragma once

#include <stdexcept>
#include <string>

namespace capset {

// Base of every error thrown by the library. Callers that only need a message
// can catch this; the subclasses let tests and the CLI tell failures apart.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

// Repeated points where the operation quantifies over distinct ones.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

// Dimension exceeds what a dense 3^n bitmap can address.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class InvalidInputError : public Error {
 public:
  using Error::Error;
};

// A construction hypothesis failed. `condition` names it (e.g. "condition1",
// "pset:pn2"); the message carries the witness points.
class PreconditionError : public Error {
 public:
  PreconditionError(std::string condition, const std::string& what)
      : Error(what), condition_(std::move(condition)) {}

  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

}  // namespace capset
