#pragma once

#include <stdexcept>
#include <string>

namespace triwise {

/// Argument outside the mathematical domain of an operation (p outside (0,1),
/// t + 3s > n, mismatched ground sets, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Request exceeds what an enumeration-based operation is built to handle.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structural precondition on an input family does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Interval evaluation could not separate a quantity from its threshold
/// within the precision cap.
class InconclusiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace triwise
