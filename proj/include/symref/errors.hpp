#ifndef SYMREF_ERRORS_HPP
#define SYMREF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace symref {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition (dimension mismatch, bad input text).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ClosureExceedsCap : public Error {
 public:
  using Error::Error;
};

class NonInvertibleGenerator : public Error {
 public:
  using Error::Error;
};

class UnsupportedAbelianization : public Error {
 public:
  using Error::Error;
};

class NonIntegerTrace : public Error {
 public:
  using Error::Error;
};

class TableInconsistent : public Error {
 public:
  using Error::Error;
};

class NotAReflection : public Error {
 public:
  using Error::Error;
};

class HyperplaneCollision : public Error {
 public:
  using Error::Error;
};

class NonIntegerMolien : public Error {
 public:
  using Error::Error;
};

class MolienMismatch : public Error {
 public:
  using Error::Error;
};

class SearchSpaceExceeded : public Error {
 public:
  using Error::Error;
};

class ReflectionNotPreserved : public Error {
 public:
  using Error::Error;
};

}  // namespace symref

#endif  // SYMREF_ERRORS_HPP
