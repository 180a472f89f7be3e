#pragma once

#include <stdexcept>
#include <string>

namespace eirep {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent caller input (bad indices, mismatched groups, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// The object violates a structural invariant (associativity, action laws, EI property).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The chosen field is not a splitting field for the groups involved.
class FieldNotSplittingError : public Error {
 public:
  using Error::Error;
};

/// A size or iteration budget was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Two results that must agree did not.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace eirep
