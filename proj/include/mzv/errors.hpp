#pragma once

#include <stdexcept>
#include <string>

namespace mzv {

// Base of every domain error raised by the library. The CLI maps all of
// these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MissingAtom : public Error {
 public:
  explicit MissingAtom(int atom)
      : Error("no value assigned to zeta atom " + std::to_string(atom)), atom_(atom) {}
  int atom() const noexcept { return atom_; }

 private:
  int atom_;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class NonPositiveArgument : public DomainError {
 public:
  using DomainError::DomainError;
};

class NonConvergent : public Error {
 public:
  using Error::Error;
};

class DepthOutOfRange : public Error {
 public:
  using Error::Error;
};

class NonIntegrable : public Error {
 public:
  using Error::Error;
};

}  // namespace mzv
