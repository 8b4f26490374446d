#pragma once

#include <stdexcept>
#include <string>

namespace permlab {

/// Input violates a mathematical precondition (not a permutation, wrong
/// pattern class, index out of range, ...). The CLI maps it to exit code 1.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed request: unknown statistic name, bad variable mapping.
/// The CLI maps it to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace permlab
