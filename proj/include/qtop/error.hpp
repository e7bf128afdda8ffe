#pragma once

#include <stdexcept>
#include <string>

namespace qtop {

// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (slice notation, coefficient strings).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Well-formed request outside the mathematical domain (bad color, bad framing
// length, division by zero, order mismatch).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A slice word that does not describe a valid diagram.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, std::size_t slice)
      : Error("slice " + std::to_string(slice) + ": " + what), slice_(slice) {}
  std::size_t slice() const noexcept { return slice_; }

 private:
  std::size_t slice_;
};

// Exact value requested where only a floating-point realization exists.
class ApproximateOnly : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace qtop
