#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace multichrome {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based, 0 when not tied to a line.
class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t line)
      : error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A parameter or record violates its declared invariants.
class validation_error : public error {
 public:
  using error::error;
};

/// The operation is undefined for the given (otherwise valid) input.
class domain_error : public error {
 public:
  using error::error;
};

class file_error : public error {
 public:
  using error::error;
};

}  // namespace multichrome
