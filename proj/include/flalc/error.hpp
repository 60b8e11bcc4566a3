#ifndef FLALC_ERROR_HPP
#define FLALC_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flalc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input. Line and column are 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Well-formed input that violates a domain invariant (bad grade, bad instance, ...).
struct ValidationError : Error {
  using Error::Error;
};

// A configurable enumeration or materialization cap was hit.
struct ResourceLimitError : Error {
  using Error::Error;
};

// Evaluation against an interpretation that cannot answer the query.
struct EvaluationError : Error {
  using Error::Error;
};

}  // namespace flalc

#endif  // FLALC_ERROR_HPP
