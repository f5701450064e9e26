#pragma once

#include <stdexcept>
#include <string>

namespace mercator {

/// Input outside the mathematical domain of an operation (punctures,
/// singular angles, unreachable geometry).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// One of the two removed points (+-pi/2, -+pi/2) of the torus.
class PunctureError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// |v| >= 1 in units of c.
class VelocityError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace mercator
