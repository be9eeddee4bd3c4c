#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hankel {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroDenominator : public Error {
 public:
  ZeroDenominator() : Error("zero denominator") {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `line`/`column` are 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ArrowShapeViolation : public Error {
 public:
  using Error::Error;
};

class ZeroDiagonal : public Error {
 public:
  using Error::Error;
};

/// Q_n <= 0 on the determinant path.
class NonPositiveQ : public Error {
 public:
  NonPositiveQ(std::size_t n, const std::string& what) : Error(what), n_(n) {}
  std::size_t index() const noexcept { return n_; }

 private:
  std::size_t n_;
};

class EngineMismatch : public Error {
 public:
  EngineMismatch(std::size_t n, const std::string& what) : Error(what), n_(n) {}
  std::size_t index() const noexcept { return n_; }

 private:
  std::size_t n_;
};

}  // namespace hankel
