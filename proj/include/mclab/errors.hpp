#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mclab {

// Base for every error raised by the library. Callers that only care about
// "the operation was rejected" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the operation's domain (bad probability, vertex index,
// formula domain, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// The operation requires a connected graph.
class NotConnectedError : public Error {
 public:
  NotConnectedError() : Error("not connected") {}
  explicit NotConnectedError(const std::string& what)
      : Error("not connected: " + what) {}
};

// An exact search was asked to run beyond its configured cap.
class TooLargeError : public Error {
 public:
  using Error::Error;
};

// The input lies outside the hypotheses of the requested check.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// Threshold specifications that fall outside both supported regimes.
class UnsupportedSpecError : public Error {
 public:
  using Error::Error;
};

// Malformed text input. line() is 1-based; 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace mclab
