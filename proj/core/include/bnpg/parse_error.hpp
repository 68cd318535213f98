#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bnpg {

// Diagnostic for the text formats. `line()` is 1-based; 0 means the error is
// about the document as a whole (e.g. a missing table).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error(line == 0 ? message
                                     : "line " + std::to_string(line) + ": " + message),
        line_(line),
        message_(message) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::string message_;
};

}  // namespace bnpg
