#pragma once

#include <stdexcept>
#include <string>

namespace kplex {

// Malformed graph input. FormatError/RangeError/ParseError let callers tell
// the three failure kinds apart.
class GraphInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FormatError : public GraphInputError {
 public:
  using GraphInputError::GraphInputError;
};

class RangeError : public GraphInputError {
 public:
  using GraphInputError::GraphInputError;
};

class ParseError : public GraphInputError {
 public:
  using GraphInputError::GraphInputError;
};

// Caller bug: an operation was invoked outside its precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Instance too large for the exhaustive solver.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace kplex
