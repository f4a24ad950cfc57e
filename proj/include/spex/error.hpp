#pragma once

#include <stdexcept>
#include <string>

namespace spex {

/// Base for every failure the library reports on well-formed calls
/// (bad arguments, malformed input, non-convergence).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace spex
