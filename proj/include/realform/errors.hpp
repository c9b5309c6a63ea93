#pragma once

#include <stdexcept>
#include <string>

namespace realform {

/// Base of every error raised by the library. The CLI maps subclasses onto
/// exit codes, so new error kinds should derive from one of the three
/// families below rather than from Error directly.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

/// Malformed input or a violated structural invariant (CLI exit 1).
class InvalidInput : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "invalid_input"; }
};

class ParentMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
  const char* kind() const noexcept override { return "parent_mismatch"; }
};

class IllDefinedMap : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
  const char* kind() const noexcept override { return "ill_defined_map"; }
};

class NotAutomorphism : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
  const char* kind() const noexcept override { return "not_automorphism"; }
};

class NotInvolution : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
  const char* kind() const noexcept override { return "not_involution"; }
};

class NotEquivariant : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
  const char* kind() const noexcept override { return "not_equivariant"; }
};

class UnsupportedLabels : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
  const char* kind() const noexcept override { return "unsupported_labels"; }
};

/// An operation was called outside its precondition (CLI exit 2).
class PreconditionViolation : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "precondition_violation"; }
};

/// Enumeration would exceed the configured budget (CLI exit 3).
class BudgetExceeded : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "budget_exceeded"; }
};

}  // namespace realform
