#pragma once

#include <stdexcept>
#include <string>

namespace kuc {

// Bad input: malformed model files or formulas, mismatched universes,
// unknown identifiers, contradictory flags. Exit code 2 at the CLI.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource cap would be exceeded. Exit code 1 at the CLI.
class CapError : public std::runtime_error {
 public:
  explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

// Lexical or syntax error carrying a 1-based source position.
class ParseError : public UsageError {
 public:
  ParseError(int line, int column, const std::string& message)
      : UsageError(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace kuc
