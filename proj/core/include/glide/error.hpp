#pragma once

#include <stdexcept>
#include <string>

namespace glide {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: unknown ids, duplicate ids, unreadable files.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A precondition or structural invariant does not hold
/// (not a matching, not a cycle, open path where a loop is required, ...).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Two edge or vertex sets built against different hypergraphs were combined.
class AmbientMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace glide
