#pragma once

#include <stdexcept>
#include <string>

namespace qstar {

/// Dimension or shape mismatch between operands.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A matrix that fails one of the density-matrix conditions.
class PhysicalityError : public DomainError {
 public:
  using DomainError::DomainError;
};

class HermiticityError : public PhysicalityError {
 public:
  using PhysicalityError::PhysicalityError;
};

class TraceError : public PhysicalityError {
 public:
  using PhysicalityError::PhysicalityError;
};

class PositivityError : public PhysicalityError {
 public:
  using PhysicalityError::PhysicalityError;
};

/// A quadrature rule is not exact enough for the requested integral.
class QuadratureError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Quantizer/dequantizer family fails the self-consistency condition.
class SchemeConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input (state specs, JSON documents, CLI arguments).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qstar
