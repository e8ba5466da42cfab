#pragma once

#include <stdexcept>
#include <string>

namespace bcc {

// Malformed arguments: out-of-range vertices, bad orderings, unassigned edges.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The input is well formed but outside the operation's domain
// (e.g. a non-chordal graph handed to the clique-tree builder).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Instance exceeds a configured search cap or budget.
class SizeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text format errors, tagged with the 1-based line number.
// Line 0 marks errors that are not tied to a line, such as an unreadable file.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace bcc
