#pragma once

#include <stdexcept>
#include <string>

namespace borelss {

// Malformed user input (bad n, unknown basis name, undersized cap, ...).
class InvalidInput : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation was not met by the caller.
class PreconditionViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

// Input is well formed but outside what the algorithm handles (rank > 1 rows, ...).
class UnsupportedShape : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Cohomology index requested for something other than a Z/2 outcome.
class WrongGroup : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Brute-force oracle declined an instance that is too large.
class Refusal : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace borelss
