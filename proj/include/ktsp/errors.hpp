#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ktsp {

/// Base of every error the library throws on bad input or exhausted budgets.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `offset()` is the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// An operation's precondition does not hold (disconnected input, k out of
/// range, family parameter outside its admissible range, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An exact computation would exceed a named budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace ktsp
