#pragma once

#include <stdexcept>
#include <string>

namespace epzeta {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when a rational function is evaluated at a root of its denominator.
class PoleError : public Error {
public:
  PoleError(const std::string& what, int multiplicity)
      : Error(what), multiplicity_(multiplicity) {}

  int multiplicity() const { return multiplicity_; }

private:
  int multiplicity_;
};

/// Raised by the file parsers; carries the offending line number (1-based).
class ParseError : public Error {
public:
  ParseError(const std::string& source, int line, const std::string& message)
      : Error(source + ":" + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

private:
  int line_;
};

}  // namespace epzeta
