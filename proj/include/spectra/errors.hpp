#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spectra {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed literal or document; `position` is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

/// Field operation on surds with different discriminants.
class FieldMismatch : public NumericError {
 public:
  using NumericError::NumericError;
};

/// The certification window of markov_value could not separate the maximum.
class WindowInsufficient : public Error {
 public:
  using Error::Error;
};

/// A word or tail violates the forbidden-factor constraints.
class InadmissibleError : public Error {
 public:
  using Error::Error;
};

/// Enclosures were too wide to decide a bisection step.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// Block concatenation did not match the declared length formula.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// No infinite admissible continuation exists from the requested state.
class DeadStateError : public Error {
 public:
  using Error::Error;
};

class NoRootError : public Error {
 public:
  using Error::Error;
};

}  // namespace spectra
