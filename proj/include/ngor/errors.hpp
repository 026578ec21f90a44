#pragma once

#include <stdexcept>
#include <string>

namespace ngor {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Graph text that could not be parsed. Positions are 1-based; a line of 0
// means the problem concerns the file as a whole.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what)
      : Error(format(line, column, what)), line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  static std::string format(int line, int column, const std::string& what) {
    if (line <= 0) return what;
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + what;
  }

  int line_;
  int column_;
};

class InvalidGraphError : public Error {
 public:
  using Error::Error;
};

// Self-intersection weights required but absent.
class MissingWeightsError : public Error {
 public:
  using Error::Error;
};

class NotNegativeDefiniteError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

class BoxTooLargeError : public Error {
 public:
  using Error::Error;
};

// A mathematically impossible state was reached: this signals a bug in the
// library, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ngor
