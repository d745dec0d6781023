#include "eet/system.hpp"

#include <cmath>
#include <string>

#include "eet/units.hpp"

namespace eet {

SiteNetwork::SiteNetwork(std::vector<Site> sites, CouplingRule coupling)
    : sites_(std::move(sites)), coupling_(std::move(coupling)) {
  const int n = static_cast<int>(sites_.size());
  if (n < 1) {
    throw Error(ErrorKind::InvalidGeometry, "network needs at least one site");
  }
  for (const Site& site : sites_) {
    if (!site.position_nm.allFinite() || !std::isfinite(site.energy_meV)) {
      throw Error(ErrorKind::InvalidArgument,
                  "site positions and energies must be finite");
    }
  }
  for (int m = 0; m < n; ++m) {
    for (int k = m + 1; k < n; ++k) {
      if ((sites_[m].position_nm - sites_[k].position_nm).norm() <= 0.0) {
        throw Error(ErrorKind::InvalidGeometry,
                    "sites " + std::to_string(m + 1) + " and " +
                        std::to_string(k + 1) + " coincide");
      }
    }
  }
  if (const auto* explicit_j = std::get_if<ExplicitCouplings>(&coupling_)) {
    const Eigen::MatrixXd& j = explicit_j->matrix_meV;
    if (j.rows() != n || j.cols() != n) {
      throw Error(ErrorKind::InvalidArgument,
                  "coupling matrix dimension does not match site count");
    }
    if (!j.allFinite()) {
      throw Error(ErrorKind::InvalidArgument,
                  "coupling matrix entries must be finite");
    }
    if ((j - j.transpose()).cwiseAbs().maxCoeff() != 0.0) {
      throw Error(ErrorKind::InvalidArgument,
                  "coupling matrix must be symmetric");
    }
    if (j.diagonal().cwiseAbs().maxCoeff() != 0.0) {
      throw Error(ErrorKind::InvalidArgument,
                  "coupling matrix must have zero diagonal");
    }
  } else {
    const auto& dipole = std::get<DipolePerpendicular>(coupling_);
    if (!(dipole.strength_meV_nm3 >= 0.0) ||
        !std::isfinite(dipole.strength_meV_nm3)) {
      throw Error(ErrorKind::InvalidArgument,
                  "dipole coupling strength must be finite and >= 0");
    }
  }
}

double SiteNetwork::distance_nm(int m, int n) const {
  return (sites_[m].position_nm - sites_[n].position_nm).norm();
}

double coupling_from_distance(double distance_nm, double strength_meV_nm3) {
  if (!(distance_nm > 0.0) || !std::isfinite(distance_nm)) {
    throw Error(ErrorKind::InvalidGeometry,
                "inter-site distance must be > 0");
  }
  return strength_meV_nm3 / (distance_nm * distance_nm * distance_nm);
}

SiteHamiltonian build_hamiltonian(const SiteNetwork& network) {
  const int n = network.size();
  SiteHamiltonian h;
  h.matrix_rad_ps = Eigen::MatrixXd::Zero(n, n);
  h.distances_nm = Eigen::MatrixXd::Zero(n, n);

  for (int m = 0; m < n; ++m) {
    h.matrix_rad_ps(m, m) =
        units::energy_to_angular_frequency(network.sites()[m].energy_meV);
  }
  for (int m = 0; m < n; ++m) {
    for (int k = m + 1; k < n; ++k) {
      const double r = network.distance_nm(m, k);
      h.distances_nm(m, k) = r;
      h.distances_nm(k, m) = r;
      double j_meV = 0.0;
      if (const auto* dipole =
              std::get_if<DipolePerpendicular>(&network.coupling())) {
        j_meV = coupling_from_distance(r, dipole->strength_meV_nm3);
      } else {
        j_meV = std::get<ExplicitCouplings>(network.coupling()).matrix_meV(m, k);
      }
      const double j = units::energy_to_angular_frequency(j_meV);
      h.matrix_rad_ps(m, k) = j;
      h.matrix_rad_ps(k, m) = j;
    }
  }
  return h;
}

namespace {

// Largest-magnitude entry of each column made positive; exact ties resolved
// toward the lowest site index.
void apply_sign_convention(Eigen::MatrixXd& u) {
  for (int a = 0; a < u.cols(); ++a) {
    int pivot = 0;
    for (int n = 1; n < u.rows(); ++n) {
      if (std::abs(u(n, a)) > std::abs(u(pivot, a))) pivot = n;
    }
    if (u(pivot, a) < 0.0) u.col(a) = -u.col(a);
  }
}

}  // namespace

ExcitonBasis diagonalize(const SiteHamiltonian& hamiltonian) {
  const Eigen::MatrixXd& h = hamiltonian.matrix_rad_ps;
  if (h.rows() != h.cols()) {
    throw Error(ErrorKind::InvalidArgument, "Hamiltonian must be square");
  }
  if ((h - h.transpose()).cwiseAbs().maxCoeff() != 0.0) {
    throw Error(ErrorKind::InvalidArgument, "Hamiltonian must be symmetric");
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  ExcitonBasis basis;
  basis.energies_rad_ps = solver.eigenvalues();  // ascending
  basis.U = solver.eigenvectors();
  apply_sign_convention(basis.U);

  const int n = basis.size();
  const double ortho =
      (basis.U.transpose() * basis.U - Eigen::MatrixXd::Identity(n, n))
          .cwiseAbs()
          .maxCoeff();
  const double scale = std::max(h.cwiseAbs().maxCoeff(), 1.0);
  const double residual =
      (h * basis.U - basis.U * basis.energies_rad_ps.asDiagonal())
          .cwiseAbs()
          .maxCoeff();
  if (ortho > 1e-12 || residual > 1e-10 * scale) {
    throw Error(ErrorKind::InvalidArgument,
                "eigendecomposition failed its residual bounds");
  }
  return basis;
}

DensityMatrix transform_density(const DensityMatrix& state, Basis to,
                                const Eigen::MatrixXd& U) {
  validate_density(state);
  if (state.rho.rows() != U.rows()) {
    throw Error(ErrorKind::InvalidArgument,
                "density matrix and basis dimensions do not match");
  }
  if (state.basis == to) return state;

  DensityMatrix out;
  out.basis = to;
  if (to == Basis::Exciton) {
    out.rho = U.transpose() * state.rho * U;
  } else {
    out.rho = U * state.rho * U.transpose();
  }
  return out;
}

}  // namespace eet
