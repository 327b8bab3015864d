#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace areg {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on caller-supplied data failed (bad range, malformed set, ...).
class RejectedInputError : public Error {
 public:
  using Error::Error;
};

/// Two interacting values disagree on dimension.
class DimensionMismatchError : public RejectedInputError {
 public:
  using RejectedInputError::RejectedInputError;
};

/// The requested certificate is only available for other representations
/// (e.g. an exact cocoercivity constant of a non-symmetric matrix).
class UnsupportedRepresentationError : public Error {
 public:
  using Error::Error;
};

/// An invariant that should hold by construction failed at runtime.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

/// A bound function was evaluated below its tabulated domain.
class BoundFnRangeError : public RejectedInputError {
 public:
  using RejectedInputError::RejectedInputError;
};

/// An iteration produced a non-finite value; carries the failing step.
class NumericFailureError : public Error {
 public:
  NumericFailureError(const std::string& what, long step)
      : Error(what + " (step " + std::to_string(step) + ")"), step_(step) {}
  long step() const noexcept { return step_; }

 private:
  long step_;
};

/// Instance text is not valid against the schema; carries the field path.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string path)
      : Error(what + " [" + path + "]"), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Instance text parsed but violates a semantic invariant; carries the field path.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, std::string path)
      : Error(what + " [" + path + "]"), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace areg
