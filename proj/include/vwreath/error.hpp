#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vwreath {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input. `position` is a byte offset into the parsed text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        message_(what),
        position_(position) {}
  std::size_t position() const { return position_; }
  // The diagnostic without the offset suffix.
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A rigidity or factorization step found data inconsistent with the theory.
class ExtractionError : public Error {
 public:
  using Error::Error;
};

}  // namespace vwreath
