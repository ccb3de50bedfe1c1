#pragma once

#include <stdexcept>
#include <string>

namespace hdo {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (token streams, matrix files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Index or range outside the valid domain of an operation.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Precondition violation on argument shape or value (empty inputs,
/// dimension mismatches, zero block size).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A configured resource bound (cell budget, overflow guard) would be exceeded.
class ResourceGuardError : public Error {
 public:
  using Error::Error;
};

/// Serialized oracle is malformed, truncated or of an unknown version.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// An oracle answer disagreed with the direct reference computation.
class CrossCheckError : public Error {
 public:
  using Error::Error;
};

}  // namespace hdo
