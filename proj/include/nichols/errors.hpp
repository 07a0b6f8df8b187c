#pragma once

#include <stdexcept>
#include <string>

namespace nichols {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input: labels, matrix files, word lists.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A size guard tripped (roots, group order, tensor dimension).
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class UnsupportedInput : public Error {
 public:
  using Error::Error;
};

// Internal consistency failure; indicates a bug, never user error.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace nichols
