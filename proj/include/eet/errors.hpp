#pragma once

#include <stdexcept>
#include <string>

namespace eet {

enum class ErrorKind {
  InvalidArgument,    // non-finite or out-of-domain numeric input
  InvalidGeometry,    // coincident sites, nonpositive distances
  Divergence,         // evaluation at a pole, e.g. n(omega) at omega = 0
  QuadratureFailure,  // PV integral did not converge within budget
  Instability,        // integrator trace drift beyond tolerance
  SyntaxError,        // scenario text is not valid JSON
  SchemaError,        // scenario JSON violates the schema
  PhysicsError,       // schema-valid scenario with impossible physics
  IoError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// Carries the best available estimate so a caller can decide whether a
/// non-converged principal-value integral is still usable.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& message, double best_estimate,
                  double achieved_rel_error)
      : Error(ErrorKind::QuadratureFailure, message),
        best_estimate_(best_estimate),
        achieved_rel_error_(achieved_rel_error) {}

  double best_estimate() const { return best_estimate_; }
  double achieved_rel_error() const { return achieved_rel_error_; }

 private:
  double best_estimate_;
  double achieved_rel_error_;
};

}  // namespace eet
