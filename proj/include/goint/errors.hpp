#pragma once

#include <stdexcept>
#include <string>

namespace goint {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructive builder rejected its input; the message names the failed
/// precondition (normalization, monotonicity, distortion, lambda root, ...).
class ConstructionError : public Error {
 public:
  ConstructionError(std::string precondition, const std::string& detail);
  const std::string& precondition() const noexcept { return precondition_; }

 private:
  std::string precondition_;
};

/// A table capacity was given without an entry for some subset.
class IncompleteTableError : public Error {
 public:
  using Error::Error;
};

/// An operator or functional is not admissible for the requested integral.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Caller violated an operation precondition (shared space, value range, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace goint
