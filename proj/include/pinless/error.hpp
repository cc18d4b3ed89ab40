#pragma once

#include <stdexcept>
#include <string>

namespace pinless {

/// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a type invariant (non-total table, mismatched ring tags,
/// wrong dimensions). Distinct from an operation legitimately answering "no".
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A computed object failed a check it must pass (d^2 != 0, broken
/// homomorphism). The message names the offending data.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Request outside what the engine models.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input (group, field, manifold or JSON specs).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace pinless
