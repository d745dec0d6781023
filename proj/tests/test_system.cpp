#include <doctest.h>

#include <cmath>
#include <random>

#include "eet/system.hpp"
#include "eet/units.hpp"
#include "support/oracles.hpp"

using namespace eet;

namespace {

SiteNetwork line_network(const std::vector<double>& x_nm,
                         const std::vector<double>& energies_meV,
                         CouplingRule rule = DipolePerpendicular{100.0}) {
  std::vector<Site> sites;
  for (size_t i = 0; i < x_nm.size(); ++i) {
    sites.push_back(Site{Eigen::Vector3d(x_nm[i], 0.0, 0.0), energies_meV[i]});
  }
  return SiteNetwork(std::move(sites), std::move(rule));
}

Eigen::MatrixXd zero_couplings(int n) { return Eigen::MatrixXd::Zero(n, n); }

}  // namespace

TEST_CASE("coupling_from_distance") {
  CHECK(coupling_from_distance(1.0, 100.0) == 100.0);
  CHECK(coupling_from_distance(5.0, 100.0) == doctest::Approx(0.8));
  CHECK(coupling_from_distance(10.0, 100.0) == doctest::Approx(0.1));
  CHECK_THROWS_AS(coupling_from_distance(0.0, 100.0), Error);
  CHECK_THROWS_AS(coupling_from_distance(-1.0, 100.0), Error);
}

TEST_CASE("network validation") {
  CHECK_THROWS_AS(SiteNetwork({}, DipolePerpendicular{}), Error);
  // coincident sites
  std::vector<Site> twice{Site{{0, 0, 0}, 1.0}, Site{{0, 0, 0}, 2.0}};
  CHECK_THROWS_AS(SiteNetwork(twice, DipolePerpendicular{}), Error);
  // asymmetric explicit couplings
  Eigen::MatrixXd j = zero_couplings(2);
  j(0, 1) = 0.5;
  std::vector<Site> pair{Site{{0, 0, 0}, 1.0}, Site{{5, 0, 0}, 2.0}};
  CHECK_THROWS_AS(SiteNetwork(pair, ExplicitCouplings{j}), Error);
  // nonzero diagonal
  j(1, 0) = 0.5;
  j(0, 0) = 1.0;
  CHECK_THROWS_AS(SiteNetwork(pair, ExplicitCouplings{j}), Error);
}

TEST_CASE("build_hamiltonian") {
  SUBCASE("single site") {
    const SiteNetwork net = line_network({0.0}, {1000.0});
    const SiteHamiltonian h = build_hamiltonian(net);
    CHECK(h.matrix_rad_ps.rows() == 1);
    CHECK(std::abs(h.matrix_rad_ps(0, 0) - 1519.27) <= 0.01);
  }
  SUBCASE("dimer with dipole rule") {
    const SiteHamiltonian h =
        build_hamiltonian(line_network({0.0, 5.0}, {1.0, 1.0}));
    CHECK(std::abs(h.matrix_rad_ps(0, 1) - 1.21541) <= 1e-4);
    CHECK(h.matrix_rad_ps(0, 1) == h.matrix_rad_ps(1, 0));
    CHECK(h.distances_nm(0, 1) == doctest::Approx(5.0));
  }
  SUBCASE("explicit zero couplings give a diagonal Hamiltonian") {
    const SiteHamiltonian h = build_hamiltonian(line_network(
        {0.0, 5.0, 9.0}, {2.0, 1.0, 3.0}, ExplicitCouplings{zero_couplings(3)}));
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        if (a != b) CHECK(h.matrix_rad_ps(a, b) == 0.0);
      }
    }
  }
}

TEST_CASE("diagonalize") {
  SUBCASE("already diagonal") {
    const SiteHamiltonian h = build_hamiltonian(line_network(
        {0.0, 5.0, 9.0}, {2.0, 1.0, 3.0}, ExplicitCouplings{zero_couplings(3)}));
    const ExcitonBasis basis = diagonalize(h);
    // ascending energies; U is a permutation with positive entries
    CHECK(basis.energies_rad_ps(0) ==
          doctest::Approx(units::energy_to_angular_frequency(1.0)));
    CHECK(basis.energies_rad_ps(2) ==
          doctest::Approx(units::energy_to_angular_frequency(3.0)));
    for (int a = 0; a < 3; ++a) {
      int nonzero = 0;
      for (int n = 0; n < 3; ++n) {
        if (std::abs(basis.U(n, a)) > 1e-12) {
          ++nonzero;
          CHECK(basis.U(n, a) > 0.0);
        }
      }
      CHECK(nonzero == 1);
    }
  }

  SUBCASE("symmetric dimer is the textbook 2x2") {
    Eigen::MatrixXd j = zero_couplings(2);
    j(0, 1) = j(1, 0) = 0.8;  // meV
    const SiteHamiltonian h =
        build_hamiltonian(line_network({0.0, 5.0}, {1.0, 1.0},
                                       ExplicitCouplings{j}));
    const ExcitonBasis basis = diagonalize(h);
    const double e = units::energy_to_angular_frequency(1.0);
    const double coupling = units::energy_to_angular_frequency(0.8);
    CHECK(basis.energies_rad_ps(0) == doctest::Approx(e - coupling));
    CHECK(basis.energies_rad_ps(1) == doctest::Approx(e + coupling));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    CHECK(basis.U(0, 0) == doctest::Approx(inv_sqrt2));
    CHECK(basis.U(1, 0) == doctest::Approx(-inv_sqrt2));
    CHECK(basis.U(0, 1) == doctest::Approx(inv_sqrt2));
    CHECK(basis.U(1, 1) == doctest::Approx(inv_sqrt2));
  }

  SUBCASE("3-site eigenpairs match the characteristic-polynomial oracle") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> entry(-2.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
      Eigen::Matrix3d m;
      for (int a = 0; a < 3; ++a) {
        for (int b = a; b < 3; ++b) {
          m(a, b) = entry(rng);
          m(b, a) = m(a, b);
        }
      }
      SiteHamiltonian h;
      h.matrix_rad_ps = m;
      h.distances_nm = Eigen::MatrixXd::Zero(3, 3);
      const ExcitonBasis basis = diagonalize(h);
      const auto roots = oracles::symmetric3_eigenvalues(m);
      for (int a = 0; a < 3; ++a) {
        CHECK(std::abs(basis.energies_rad_ps(a) - roots[a]) <= 1e-9);
        const Eigen::Vector3d v =
            oracles::symmetric3_eigenvector(m, roots[a]);
        const double overlap = std::abs(v.dot(basis.U.col(a)));
        CHECK(std::abs(overlap - 1.0) <= 1e-9);
      }
    }
  }

  SUBCASE("orthogonality, residual and determinism") {
    const SiteHamiltonian h = build_hamiltonian(
        line_network({0.0, 6.0, 14.0}, {1.0, 1.4, 2.2}));
    const ExcitonBasis basis = diagonalize(h);
    const ExcitonBasis again = diagonalize(h);
    CHECK((basis.U - again.U).cwiseAbs().maxCoeff() == 0.0);
    CHECK((basis.energies_rad_ps - again.energies_rad_ps)
              .cwiseAbs()
              .maxCoeff() == 0.0);
    const Eigen::MatrixXd gram = basis.U.transpose() * basis.U;
    CHECK((gram - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() <=
          1e-12);
  }

  SUBCASE("scaling covariance: s H -> s eps with U unchanged") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> scale_dist(0.1, 6.0);
    const SiteHamiltonian h = build_hamiltonian(
        line_network({0.0, 7.0, 15.0, 21.0}, {1.0, 2.3, 1.7, 2.9}));
    const ExcitonBasis base = diagonalize(h);
    for (int trial = 0; trial < 10; ++trial) {
      const double s = scale_dist(rng);
      SiteHamiltonian scaled;
      scaled.matrix_rad_ps = s * h.matrix_rad_ps;
      scaled.distances_nm = h.distances_nm;
      const ExcitonBasis result = diagonalize(scaled);
      CHECK((result.energies_rad_ps - s * base.energies_rad_ps)
                .cwiseAbs()
                .maxCoeff() <= 1e-10 * s *
                base.energies_rad_ps.cwiseAbs().maxCoeff());
      CHECK((result.U - base.U).cwiseAbs().maxCoeff() <= 1e-10);
    }
  }
}

TEST_CASE("transform_density") {
  SUBCASE("identity transform") {
    const DensityMatrix rho = DensityMatrix::projector(0, 2, Basis::Site);
    const DensityMatrix out =
        transform_density(rho, Basis::Exciton, Eigen::MatrixXd::Identity(2, 2));
    CHECK((out.rho - rho.rho).cwiseAbs().maxCoeff() == 0.0);
    CHECK(out.basis == Basis::Exciton);
  }

  SUBCASE("site-3 pure state populations sum to one in the exciton basis") {
    const SiteHamiltonian h = build_hamiltonian(
        line_network({0.0, 6.0, 11.0}, {1.0, 1.5, 2.5}));
    const ExcitonBasis basis = diagonalize(h);
    const DensityMatrix site = DensityMatrix::projector(2, 3, Basis::Site);
    const DensityMatrix ex = transform_density(site, Basis::Exciton, basis.U);
    double sum = 0.0;
    for (int a = 0; a < 3; ++a) {
      const double pop = ex.rho(a, a).real();
      CHECK(std::abs(pop - basis.U(2, a) * basis.U(2, a)) <= 1e-12);
      sum += pop;
    }
    CHECK(std::abs(sum - 1.0) <= 1e-12);
  }

  SUBCASE("symmetric dimer splits |s1><s1| into half populations") {
    Eigen::MatrixXd j = zero_couplings(2);
    j(0, 1) = j(1, 0) = 0.8;
    const ExcitonBasis basis = diagonalize(build_hamiltonian(
        line_network({0.0, 5.0}, {1.0, 1.0}, ExplicitCouplings{j})));
    const DensityMatrix site = DensityMatrix::projector(0, 2, Basis::Site);
    const DensityMatrix ex = transform_density(site, Basis::Exciton, basis.U);
    CHECK(ex.rho(0, 0).real() == doctest::Approx(0.5));
    CHECK(ex.rho(1, 1).real() == doctest::Approx(0.5));
    CHECK(std::abs(ex.rho(0, 1)) == doctest::Approx(0.5));
  }

  SUBCASE("round trip, trace and Hermiticity preservation") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> entry(-1.0, 1.0);
    const ExcitonBasis basis = diagonalize(
        build_hamiltonian(line_network({0.0, 6.0, 11.0}, {1.0, 1.5, 2.5})));
    for (int trial = 0; trial < 20; ++trial) {
      // random valid density matrix: normalized v v^dagger mixture
      Eigen::MatrixXcd a(3, 3);
      for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
          a(r, c) = std::complex<double>(entry(rng), entry(rng));
        }
      }
      Eigen::MatrixXcd rho = a * a.adjoint();
      rho /= rho.trace();
      const DensityMatrix state{rho, Basis::Site};
      const DensityMatrix ex = transform_density(state, Basis::Exciton,
                                                 basis.U);
      CHECK(std::abs(ex.trace_real() - 1.0) <= 1e-12);
      CHECK(ex.hermiticity_defect() <= 1e-12);
      const DensityMatrix back = transform_density(ex, Basis::Site, basis.U);
      CHECK((back.rho - rho).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }

  SUBCASE("errors") {
    const DensityMatrix rho = DensityMatrix::projector(0, 2, Basis::Site);
    CHECK_THROWS_AS(
        transform_density(rho, Basis::Exciton, Eigen::MatrixXd::Identity(3, 3)),
        Error);
    DensityMatrix bad = rho;
    bad.rho(0, 0) = 2.0;  // trace 2
    CHECK_THROWS_AS(
        transform_density(bad, Basis::Exciton, Eigen::MatrixXd::Identity(2, 2)),
        Error);
  }
}
