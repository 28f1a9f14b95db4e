#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace windinv {

// Syntax error in a word, polynomial, presentation, script or certificate.
// `position` is a byte offset into the parsed text (or a line number for
// line-oriented formats; the message says which).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Signed 64-bit coefficient arithmetic is checked; wrapping would silently
// corrupt exact invariants, so overflow raises this instead.
class OverflowError : public std::runtime_error {
 public:
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace windinv
