#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wmod {

/// Raised when an argument is outside the mathematical domain of an operation.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Store and file errors. The CLI maps these to exit code 3.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t offset, std::size_t line, std::size_t column)
      : std::runtime_error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        offset_(offset),
        line_(line),
        column_(column) {}

  /// Zero-based byte offset into the input.
  std::size_t offset() const noexcept { return offset_; }
  /// One-based.
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t offset_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace wmod
