#pragma once

#include <stdexcept>
#include <string>

namespace nilharm {

/// Precondition or input-shape violations (dimension mismatch, bad tag, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised for catalog rows whose bracket is delegated to an external reference.
class BracketNotSpecified : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation needs Pf(lambda) != 0 and it vanishes.
class SingularFunctional : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation does not apply to the given algebra
/// (e.g. searching for a stepwise split of an already square integrable one).
class NotApplicable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a functional lies outside the implemented normal-form reach.
class OutOfReach : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace nilharm
