#pragma once

#include <stdexcept>
#include <string>

namespace zfhp {

// Error hierarchy. The CLI maps InvalidArgument/OutOfRange to exit code 2
// and DomainError (and subclasses) to exit code 3.

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class OutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// s = 1 passed to zeta or anything built on it.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// 2^{1-s} = 1 with s != 1: the eta/zeta ratio is 0/0 there.
class ConditionError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace zfhp
