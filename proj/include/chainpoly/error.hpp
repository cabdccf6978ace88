#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chainpoly {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A degree bound passed by the caller is smaller than the polynomial degree.
class InvalidDegreeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Interlacing was requested for a polynomial that is not real-rooted.
class NotRealRootedError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A required optional parameter was not supplied.
class MissingParameterError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The poset is not graded (or not bounded below) where that is required.
class GradedStructureError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An enumeration or construction would exceed a configured cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Two computations that must agree did not. Indicates a bug.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace chainpoly
