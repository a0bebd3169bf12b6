#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fforest {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Multiplication table dimensions do not match the element list.
class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

/// A table entry is not a valid element index.
class IndexOutOfRangeError : public Error {
 public:
  IndexOutOfRangeError(std::size_t row, std::size_t col, const std::string& msg)
      : Error(msg), row(row), col(col) {}
  std::size_t row;
  std::size_t col;
};

/// Associativity failed; (i, j, k) witnesses (ei*ej)*ek != ei*(ej*ek).
class NonAssociativeError : public Error {
 public:
  NonAssociativeError(std::size_t i, std::size_t j, std::size_t k,
                      const std::string& msg)
      : Error(msg), i(i), j(j), k(k) {}
  std::size_t i;
  std::size_t j;
  std::size_t k;
};

/// A construction was asked for a semigroup with no elements.
class ZeroDimensionError : public Error {
 public:
  using Error::Error;
};

class ZeroOrderError : public Error {
 public:
  using Error::Error;
};

class EmptyGeneratorSetError : public Error {
 public:
  using Error::Error;
};

class EmptySequenceError : public Error {
 public:
  using Error::Error;
};

class EmptyWordError : public Error {
 public:
  using Error::Error;
};

/// A word contains a letter outside the homomorphism's alphabet.
class UnknownLetterError : public Error {
 public:
  UnknownLetterError(std::size_t position, char letter, const std::string& msg)
      : Error(msg), position(position), letter(letter) {}
  std::size_t position;
  char letter;
};

/// The exhaustive search guard was exceeded.
class WordTooLongError : public Error {
 public:
  using Error::Error;
};

/// A range query was given an empty interval.
class EmptyRangeError : public Error {
 public:
  using Error::Error;
};

/// A range query was given offsets outside the word.
class RangeOutOfBoundsError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Indicates a defect in this
/// library, never a problem with the caller's input.
class InternalInvariantError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file or JSON document.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace fforest
