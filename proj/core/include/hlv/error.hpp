#pragma once

#include <stdexcept>
#include <string>

namespace hlv {

// Raised when an operation's mathematical precondition fails. The message is
// part of the contract ("division by zero", "singular specialization", ...).
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an enumeration would exceed its step budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hlv
