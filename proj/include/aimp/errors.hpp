#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aimp {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidAddress : public Error {
 public:
  using Error::Error;
};

class InvalidLiteral : public Error {
 public:
  using Error::Error;
};

class TypeError : public Error {
 public:
  TypeError(std::string location, std::string expected, std::string found)
      : Error("type error at " + location + ": expected " + expected + ", found " + found),
        location_(std::move(location)),
        expected_(std::move(expected)),
        found_(std::move(found)) {}

  const std::string& location() const { return location_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::string location_;
  std::string expected_;
  std::string found_;
};

class EvalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(std::move(message)) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// Malformed data file (CoNLL-U, embeddings, lexicons, config).
class FormatError : public Error {
 public:
  FormatError(std::size_t line, std::string message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class InvalidSignature : public Error {
 public:
  using Error::Error;
};

}  // namespace aimp
