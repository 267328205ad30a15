#pragma once

#include <stdexcept>
#include <string>

namespace tropalg {

/// Raised when an operation is mathematically undefined for its arguments
/// (inverse of the zero element, canonical form of the zero polynomial, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Raised when the caller violates an interface contract (arity mismatch,
/// malformed input text, ...).
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace tropalg
