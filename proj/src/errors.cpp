#include "eet/errors.hpp"

namespace eet {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::InvalidGeometry: return "invalid-geometry";
    case ErrorKind::Divergence: return "divergence";
    case ErrorKind::QuadratureFailure: return "quadrature-failure";
    case ErrorKind::Instability: return "instability";
    case ErrorKind::SyntaxError: return "syntax";
    case ErrorKind::SchemaError: return "schema";
    case ErrorKind::PhysicsError: return "physics";
    case ErrorKind::IoError: return "io";
  }
  return "unknown";
}

}  // namespace eet
