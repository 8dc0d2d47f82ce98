#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace modfib {

// Everything the library throws derives from Error.  The CLI maps
// InputError to exit code 2, CapExceeded to 3 and ConsistencyError to 4.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

class ModulusMismatch : public InputError {
 public:
  using InputError::InputError;
};

class NonInvertible : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class CmInputError : public InputError {
 public:
  using InputError::InputError;
};

class NotFound : public InputError {
 public:
  using InputError::InputError;
};

class MissingCatalog : public InputError {
 public:
  using InputError::InputError;
};

class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::uint64_t partial)
      : Error(what), partial_(partial) {}

  // How many elements had been produced when the cap was hit.
  std::uint64_t partial_count() const noexcept { return partial_; }

 private:
  std::uint64_t partial_;
};

class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace modfib
