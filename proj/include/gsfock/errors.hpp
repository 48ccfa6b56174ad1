#pragma once

#include <stdexcept>
#include <string>

namespace gsfock {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad position, level, or index passed to a library call.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// A tensor power would exceed the configured dense size limit.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

// Malformed user-supplied data (matrices, tables, config).
class InputError : public Error {
 public:
  using Error::Error;
};

// Laws required to build a spec (e.g. bicharacter laws) do not hold.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A Gram matrix that should be Hermitian is not.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

// A quotient or representation cannot be built from the given operators.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace gsfock
