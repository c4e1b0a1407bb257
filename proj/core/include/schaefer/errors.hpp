#pragma once

#include <stdexcept>
#include <string>

namespace schaefer {

// Malformed input, violated precondition, or parse failure.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Instance exceeds a configured size limit (arity or variable count).
struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// An internal guarantee failed; signals a bug or inconsistent input data.
struct InvariantViolation : std::logic_error {
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace schaefer
