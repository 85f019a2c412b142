#pragma once

#include <stdexcept>
#include <string>

namespace contactkit {

// Shape/compatibility violations: mismatched k, degree, dimensions.
struct MismatchError : std::invalid_argument {
  explicit MismatchError(const std::string& what) : std::invalid_argument(what) {}
};

// Mathematical precondition violations (non-unit inverse, nonzero constant
// term under exp, malformed germ data, non-icct input, ...).
struct DomainError : std::invalid_argument {
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when an operation cannot certify any coefficient of its result.
struct PrecisionError : std::runtime_error {
  explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

// Internal two-route verification mismatch; indicates a bug, not bad input.
struct InternalCheckError : std::logic_error {
  explicit InternalCheckError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace contactkit
