#pragma once

#include <Eigen/Dense>
#include <variant>
#include <vector>

#include "eet/density.hpp"
#include "eet/errors.hpp"

namespace eet {

struct Site {
  Eigen::Vector3d position_nm;
  double energy_meV = 0.0;
};

/// J_mn = strength / R_mn^3, the point-dipole rule for transition dipoles
/// perpendicular to the inter-site axis.
struct DipolePerpendicular {
  double strength_meV_nm3 = 100.0;
};

/// Symmetric N x N coupling matrix in meV with zero diagonal.
struct ExplicitCouplings {
  Eigen::MatrixXd matrix_meV;
};

using CouplingRule = std::variant<DipolePerpendicular, ExplicitCouplings>;

class SiteNetwork {
 public:
  /// Validates N >= 1, pairwise-distinct positions, and (for explicit
  /// couplings) symmetry, zero diagonal and matching dimension.
  SiteNetwork(std::vector<Site> sites, CouplingRule coupling);

  int size() const { return static_cast<int>(sites_.size()); }
  const std::vector<Site>& sites() const { return sites_; }
  const CouplingRule& coupling() const { return coupling_; }

  double distance_nm(int m, int n) const;

 private:
  std::vector<Site> sites_;
  CouplingRule coupling_;
};

/// Single-exciton Hamiltonian in the site basis, entries in rad/ps, plus the
/// pairwise distance matrix the bath kernel needs.
struct SiteHamiltonian {
  Eigen::MatrixXd matrix_rad_ps;  // symmetric
  Eigen::MatrixXd distances_nm;   // symmetric, zero diagonal
};

/// Eigenbasis of the site Hamiltonian. energies are ascending; column a of U
/// is the eigenvector of energies[a], U(n, a) = <s_n|e_a>. Columns are signed
/// so the entry of largest magnitude is positive (ties: lowest site index).
struct ExcitonBasis {
  Eigen::VectorXd energies_rad_ps;
  Eigen::MatrixXd U;

  int size() const { return static_cast<int>(energies_rad_ps.size()); }
  /// Transition frequency omega_ab = eps_a - eps_b.
  double omega(int a, int b) const {
    return energies_rad_ps(a) - energies_rad_ps(b);
  }
};

double coupling_from_distance(double distance_nm, double strength_meV_nm3);

SiteHamiltonian build_hamiltonian(const SiteNetwork& network);

ExcitonBasis diagonalize(const SiteHamiltonian& hamiltonian);

/// Change of basis rho_exciton = U^T rho_site U and its inverse. A no-op when
/// the state is already in the requested basis.
DensityMatrix transform_density(const DensityMatrix& state, Basis to,
                                const Eigen::MatrixXd& U);

}  // namespace eet
