#include "eet/density.hpp"

#include <string>

namespace eet {

const char* to_string(Basis basis) {
  return basis == Basis::Site ? "site" : "exciton";
}

DensityMatrix DensityMatrix::projector(int index, int n_states, Basis basis) {
  if (n_states < 1 || index < 0 || index >= n_states) {
    throw Error(ErrorKind::InvalidArgument,
                "projector index " + std::to_string(index) +
                    " out of range for " + std::to_string(n_states) +
                    " states");
  }
  DensityMatrix state;
  state.rho = Eigen::MatrixXcd::Zero(n_states, n_states);
  state.rho(index, index) = 1.0;
  state.basis = basis;
  return state;
}

double DensityMatrix::min_eigenvalue() const {
  // Hermitize first; the solver expects an exactly self-adjoint input.
  Eigen::MatrixXcd herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm);
  return solver.eigenvalues().minCoeff();
}

void validate_density(const DensityMatrix& state) {
  if (state.rho.rows() != state.rho.cols() || state.rho.rows() < 1) {
    throw Error(ErrorKind::InvalidArgument, "density matrix must be square");
  }
  if (!state.rho.allFinite()) {
    throw Error(ErrorKind::InvalidArgument,
                "density matrix has non-finite entries");
  }
  if (state.hermiticity_defect() > 1e-10) {
    throw Error(ErrorKind::InvalidArgument, "density matrix is not Hermitian");
  }
  if (std::abs(state.trace_real() - 1.0) > 1e-10 ||
      std::abs(state.rho.trace().imag()) > 1e-10) {
    throw Error(ErrorKind::InvalidArgument,
                "density matrix trace must be 1");
  }
}

}  // namespace eet
