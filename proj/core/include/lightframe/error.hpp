#ifndef LIGHTFRAME_ERROR_HPP
#define LIGHTFRAME_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lightframe {

// Mathematically invalid operation: division by zero, shape mismatch,
// degenerate input data, evaluation outside the domain.
class MathError : public std::runtime_error {
 public:
  explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input. The message carries a 1-based position.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lightframe

#endif
