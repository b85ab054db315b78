#pragma once

#include <stdexcept>
#include <string>

namespace tgrw {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: unknown token, bad document, missing edge.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input outside the mathematical domain (empty trace, alphabet mismatch).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A caller-asserted hypothesis failed a spot check.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Operation needs something the system does not carry (e.g. a convergence certificate).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A budget or size cap was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace tgrw
