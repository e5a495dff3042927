#pragma once

#include <stdexcept>
#include <string>

namespace eqidx {

/// Raised when an operation's input violates its mathematical preconditions
/// (not a subgroup, size bound exceeded, inconsistent index data, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a computed quantity that must be an integer is not. This
/// always indicates inconsistent input or a bug, never a rounding issue.
class IntegralityError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace eqidx
