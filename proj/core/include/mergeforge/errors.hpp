#pragma once

#include <stdexcept>
#include <string>

namespace mergeforge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller handed us something that violates a precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

// Checkpoint container problems.
class FormatError : public Error {
 public:
  using Error::Error;
};

class CorruptFile : public Error {
 public:
  using Error::Error;
};

class IncompatibleCheckpoints : public Error {
 public:
  using Error::Error;
};

// Non-finite values showed up mid-computation.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class DivergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace mergeforge
