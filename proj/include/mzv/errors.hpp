#pragma once

#include <stdexcept>
#include <string>

namespace mzv {

// A parameter or value violates an operation's precondition.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Sequences of different lengths were combined componentwise.
class DimensionError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A coefficient denominator vanishes modulo the requested prime.
class BadPrimeError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Residues taken modulo different primes were mixed.
class ModulusMismatchError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mzv
