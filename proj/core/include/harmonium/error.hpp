#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace harmonium {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition of an operation was violated by its arguments.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Brute-force enumeration refused because the instance exceeds the
/// configured coloring budget.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Quasipolynomial fitting failed or produced an inconsistent result.
class FitError : public Error {
 public:
  using Error::Error;
};

}  // namespace harmonium
