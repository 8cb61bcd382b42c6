#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace almostcover {

// Rejected input: bad parameters, mismatched fields, points outside a set.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (point-set files, polynomial strings).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A computed object failed one of its own postconditions.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace almostcover
