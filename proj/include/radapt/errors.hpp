#pragma once

#include <stdexcept>
#include <string>

namespace radapt {

/// Thrown when an iterative linear solver fails to reach its tolerance.
class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, int iterations, double residual)
      : std::runtime_error(what), iterations(iterations), residual(residual) {}
  int iterations = 0;
  double residual = 0.0;
};

/// Thrown by quality metrics and field evaluation when det(A) <= 0.
/// Mesh validity is the line search's responsibility, not the metric's.
class InvalidMeshError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class SingularMatrixError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// File parse failures; message carries the offending line number.
class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace radapt
