#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace loopbraid {

// Precondition violated by a caller: bad index, rank mismatch, invalid diagram.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input outside the supported fragment, e.g. tau tokens given to the Gauss codec.
class UnsupportedInput : public DomainError {
 public:
  using DomainError::DomainError;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A rewrite or Gauss move whose pattern does not match at the given location.
class MoveInapplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A presentation refers to a symbol with no interpretation.
class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace loopbraid
