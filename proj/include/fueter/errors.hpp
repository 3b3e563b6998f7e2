#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fueter {

// Violated operation precondition: parity, monogenicity, seed order, frame
// or dimension mismatch.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Syntax or binding error in textual input. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " at " + std::to_string(line) + ":" +
                           std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A computed result failed its own post-condition (e.g. a Fueter image that
// is not monogenic). Always an engine bug, never bad input.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fueter
