#pragma once

#include <stdexcept>
#include <string>

namespace quiverk {

// Raised when an operation is asked for something outside its mathematical
// domain (division by zero, non-expandable factor, invalid orbit data, ...).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when input text (JSON, rationals, command-line values) is malformed.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace quiverk
