#ifndef GRNET_ERRORS_HPP
#define GRNET_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grnet {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (TSV, series matrix, SIF, edge list). Carries a
/// 1-based line number and, when known, a 1-based column/field number.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t line = 0, std::size_t column = 0)
      : Error(decorate(msg, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  static std::string decorate(const std::string& msg, std::size_t line, std::size_t column) {
    std::string out = msg;
    if (line > 0) {
      out += " (line " + std::to_string(line);
      if (column > 0) out += ", field " + std::to_string(column);
      out += ")";
    }
    return out;
  }

  std::size_t line_;
  std::size_t column_;
};

/// Well-formed input whose content violates a contract (duplicate sample ids,
/// grouping with the wrong number of conditions, unknown gene, ...).
class DataError : public Error {
public:
  using Error::Error;
};

/// Degenerate numerics: zero-variance input to a statistic, undefined
/// correlation, nonpositive mean on a linear scale.
class NumericError : public Error {
public:
  using Error::Error;
};

/// Caller passed an argument outside an operation's stated domain.
class ArgumentError : public Error {
public:
  using Error::Error;
};

}  // namespace grnet

#endif
