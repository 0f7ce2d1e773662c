#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace c2coh {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position, std::string token)
      : std::runtime_error(message + " at position " + std::to_string(position) +
                           (token.empty() ? std::string(" (end of input)")
                                          : " near '" + token + "'")),
        position_(position),
        token_(std::move(token)) {}

  std::size_t position() const { return position_; }
  const std::string& token() const { return token_; }

 private:
  std::size_t position_;
  std::string token_;
};

// Raised when a computation would need cohomology above the configured bound.
class DegreeOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ModelError : public std::runtime_error {
 public:
  ModelError(const std::string& message, std::string pointer)
      : std::runtime_error(message + (pointer.empty() ? "" : " [" + pointer + "]")),
        pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

}  // namespace c2coh
