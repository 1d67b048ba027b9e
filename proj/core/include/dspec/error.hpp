#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dspec {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text-format problems. line() is 1-based; 0 means "no particular line".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class UnknownIdentifier : public Error {
 public:
  using Error::Error;
};

class IdentifierClash : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NotStronglyConnected : public Error {
 public:
  using Error::Error;
};

class SinkVertex : public Error {
 public:
  using Error::Error;
};

// The Perron system (P^T - I) x = 0 did not have a one-dimensional solution space.
class NullspaceDimension : public Error {
 public:
  using Error::Error;
};

class NonRealCoefficient : public Error {
 public:
  using Error::Error;
};

class KindMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace dspec
