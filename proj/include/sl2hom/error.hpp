#pragma once

#include <stdexcept>
#include <string>

namespace sl2hom {

// Raised when an argument violates a mathematical precondition (p | n,
// non-square-free level, non-unit where a unit is required, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when a brute-force computation would exceed its configured size bound.
class BoundExceeded : public std::length_error {
 public:
  explicit BoundExceeded(const std::string& what) : std::length_error(what) {}
};

}  // namespace sl2hom
