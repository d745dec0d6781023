#pragma once

#include <Eigen/Dense>
#include <complex>

#include "eet/errors.hpp"

namespace eet {

enum class Basis { Site, Exciton };

const char* to_string(Basis basis);

/// Complex N x N density matrix tagged with the basis its indices refer to.
struct DensityMatrix {
  Eigen::MatrixXcd rho;
  Basis basis = Basis::Exciton;

  int size() const { return static_cast<int>(rho.rows()); }

  /// |s_n><s_n| (or |e_a><e_a| for Basis::Exciton), n is 0-based.
  static DensityMatrix projector(int index, int n_states, Basis basis);

  double trace_real() const { return rho.trace().real(); }
  double hermiticity_defect() const {
    return (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  }
  double min_eigenvalue() const;
};

/// Throws InvalidArgument unless rho is Hermitian (1e-10) with unit trace
/// (1e-10).
void validate_density(const DensityMatrix& state);

}  // namespace eet
