#pragma once

#include <stdexcept>
#include <string>

namespace bssrw {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroPolynomialError : public Error {
 public:
  explicit ZeroPolynomialError(const std::string& where)
      : Error(where + ": zero polynomial has no meaningful answer") {}
};

class DegreeCapExceeded : public Error {
 public:
  DegreeCapExceeded(int degree, int cap)
      : Error("degree cap exceeded: degree " + std::to_string(degree) + " > cap " +
              std::to_string(cap)),
        degree_(degree),
        cap_(cap) {}
  int degree() const noexcept { return degree_; }
  int cap() const noexcept { return cap_; }

 private:
  int degree_;
  int cap_;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class NegativeRadicand : public Error {
 public:
  explicit NegativeRadicand(unsigned index)
      : Error("even root (index " + std::to_string(index) + ") of a negative number") {}
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidMeasure : public Error {
 public:
  using Error::Error;
};

class QueryError : public Error {
 public:
  using Error::Error;
};

class MembershipUndecidable : public Error {
 public:
  using Error::Error;
};

class OutsideCoveredCases : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(format(message, line, column)), line_(line), column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, int line, int column) {
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  }
  int line_;
  int column_;
};

}  // namespace bssrw
