#pragma once

#include <stdexcept>
#include <string>

namespace apeuler {

/// A density, pressure or internal energy left the admissible set.
/// Raised when the solution blows up; the current step must be abandoned.
class NonPhysicalState : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The pressure solve did not reach its residual target.
class NoConvergence : public std::runtime_error {
 public:
  NoConvergence(int iterations, double residual)
      : std::runtime_error("elliptic solve did not converge after " + std::to_string(iterations) +
                           " iterations (relative residual " + std::to_string(residual) + ")"),
        iterations_(iterations),
        residual_(residual) {}

  int iterations() const noexcept { return iterations_; }
  double residual() const noexcept { return residual_; }

 private:
  int iterations_;
  double residual_;
};

/// Invalid grid, solver or command-line configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace apeuler
