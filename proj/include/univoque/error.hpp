#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace univoque {

/// Raised when an argument lies outside the domain an operation is defined on
/// (q <= 1, a digit 0 where only {1, m} is allowed, a malformed alphabet...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Syntax error in the sequence notation. `offset` is the byte offset into
/// the input text where parsing stopped.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::invalid_argument(message + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Root bracketing or monotonicity failure in the critical-base solvers.
class SolveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace univoque
