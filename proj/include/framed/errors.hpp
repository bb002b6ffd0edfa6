#pragma once

#include <stdexcept>
#include <string>

namespace framed {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (triangulation, chain complex, matrix or link files).
class FormatError : public Error {
 public:
  using Error::Error;
};

// A manifold presentation that is not closed, oriented, connected, or
// not a chain complex.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// Arguments that do not fit together: dimension mismatches, chains that
// are not cycles, classes from different groups.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A file that could not be opened.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace framed
