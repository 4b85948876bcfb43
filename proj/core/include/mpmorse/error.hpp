#pragma once

#include <stdexcept>
#include <string>

namespace mpmorse {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file or stream.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A vertex function has two vertices sharing a value in some component.
class InjectivityError : public Error {
 public:
  using Error::Error;
};

/// A vector field that is not a discrete gradient reached code that needs one.
class InvalidGradient : public Error {
 public:
  using Error::Error;
};

/// A chain complex whose boundary does not square to zero.
class CorruptComplex : public Error {
 public:
  using Error::Error;
};

}  // namespace mpmorse
