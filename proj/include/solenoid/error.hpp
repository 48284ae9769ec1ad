#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace solenoid {

/// Input outside the mathematical domain of an operation (non-prime key,
/// negative exponent, an R factor handed to the dual path, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A literal could not be parsed, or parsed into a value that violates a type
/// invariant. `position` is the 0-based offset into the literal text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace solenoid
