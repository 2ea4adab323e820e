#pragma once

#include <stdexcept>
#include <string>

namespace qml {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class CyclicQuiver : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would exceed its configured step budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class WrongQuiverShape : public Error {
 public:
  using Error::Error;
};

class ThetaAlphaNonzero : public Error {
 public:
  using Error::Error;
};

class NotInDegreeZeroLocus : public Error {
 public:
  using Error::Error;
};

class NotSemistable : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UnknownPreset : public Error {
 public:
  using Error::Error;
};

}  // namespace qml
