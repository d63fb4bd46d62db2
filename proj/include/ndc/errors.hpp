#pragma once

#include <stdexcept>
#include <string>

namespace ndc {

/// Invalid argument or value outside the model's domain, caught before any computation runs.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when kappa <= 1: below the coupling threshold the fluctuation equations are
/// unstable around the mean field and the linearized treatment does not apply.
class LinearizationError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A conserved quantity or structural invariant drifted past tolerance while integrating.
/// Carries the normalized position zeta at which the check failed.
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, double zeta)
      : std::runtime_error(what + " at zeta = " + std::to_string(zeta)), zeta_(zeta) {}

  double zeta() const noexcept { return zeta_; }

 private:
  double zeta_;
};

/// The +/- i nu pairing of a symplectic spectrum could not be established numerically.
class DegeneracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed command line or config file input.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ndc
