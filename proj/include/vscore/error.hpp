#pragma once

#include <stdexcept>
#include <string>

namespace vscore {

enum class ErrorKind {
  invalid_argument,
  invalid_pair,
  out_of_range,
  impossible_move,
  unsupported_ballot_kind,
  domain_violation,
  budget_exceeded,
  parse_error,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::invalid_pair: return "invalid-pair";
    case ErrorKind::out_of_range: return "out-of-range";
    case ErrorKind::impossible_move: return "impossible-move";
    case ErrorKind::unsupported_ballot_kind: return "unsupported-ballot-kind";
    case ErrorKind::domain_violation: return "domain-violation";
    case ErrorKind::budget_exceeded: return "budget-exceeded";
    case ErrorKind::parse_error: return "parse-error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error(ErrorKind::parse_error,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace vscore
