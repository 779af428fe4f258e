#pragma once

#include <stdexcept>
#include <string>

namespace qdrazin {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroDivision : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class InvalidOrder : public Error {
 public:
  using Error::Error;
};

/// A determinant was requested on a matrix larger than kMaxDeterminantSize.
class SizeCapExceeded : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class Singular : public Error {
 public:
  using Error::Error;
};

class IndexTooLarge : public Error {
 public:
  using Error::Error;
};

/// Two routes that must agree did not, or a computed inverse failed its
/// defining identities.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class NumericalFailure : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qdrazin
