#pragma once

#include <stdexcept>
#include <string>

namespace charvar {

/// Base class for every failure raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Two scalars live in different quadratic fields (distinct radicands).
class IncompatibleFieldError : public Error {
 public:
  using Error::Error;
};

/// Exact division left a nonzero remainder.
class DivisionError : public Error {
 public:
  using Error::Error;
};

/// A factor could not be split over any admissible quadratic field.
/// Carries the offending factor in canonical text form.
class UnsplittableFactorError : public Error {
 public:
  UnsplittableFactorError(const std::string& what, std::string factor)
      : Error(what + ": " + factor), factor_(std::move(factor)) {}
  const std::string& factor() const noexcept { return factor_; }

 private:
  std::string factor_;
};

/// A polynomial system expected to be zero-dimensional is not.
class PositiveDimensionalError : public Error {
 public:
  using Error::Error;
};

/// Input does not have the structural shape an algorithm requires.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A configured degree or size cap was exceeded.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed.
class InternalCheckError : public Error {
 public:
  using Error::Error;
};

}  // namespace charvar
