#pragma once

#include <stdexcept>

namespace fpdir {

// Input exceeds a documented scale limit (sieve size, oracle size, ...).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NonInvertibleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// An identity that must hold exactly was violated. Always a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fpdir
