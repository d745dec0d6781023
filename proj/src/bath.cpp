#include "eet/bath.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "eet/units.hpp"

namespace eet {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::InvalidArgument,
                std::string(name) + " must be finite");
  }
}

}  // namespace

void BathModel::validate() const {
  require_finite(eta_ps2, "eta");
  require_finite(omega_c_rad_ps, "omega_c");
  require_finite(r_corr_nm, "r_corr");
  require_finite(temperature_K, "temperature");
  if (eta_ps2 < 0.0) {
    throw Error(ErrorKind::InvalidArgument, "eta must be >= 0");
  }
  if (!(omega_c_rad_ps > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "omega_c must be > 0");
  }
  if (!(r_corr_nm > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "r_corr must be > 0");
  }
  if (!(temperature_K > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "temperature must be > 0");
  }
}

DerivedBathParams derive_bath_params(const MaterialParams& material) {
  require_finite(material.deformation_e_eV, "D_e");
  require_finite(material.deformation_h_eV, "D_h");
  if (!(material.deformation_e_eV > 0.0) ||
      !(material.deformation_h_eV > 0.0)) {
    throw Error(ErrorKind::InvalidArgument,
                "deformation potentials must be > 0");
  }
  if (!(material.mass_density_kg_m3 > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "mass density must be > 0");
  }
  if (!(material.speed_of_sound_m_s > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "speed of sound must be > 0");
  }
  if (!(material.localization_length_nm > 0.0)) {
    throw Error(ErrorKind::InvalidArgument,
                "localization length must be > 0");
  }

  // omega_c = sqrt(2) u / l. u: m/s = 1e-3 nm/ps.
  const double u_nm_ps = material.speed_of_sound_m_s * 1e-3;
  const double omega_c = std::numbers::sqrt2 * u_nm_ps /
                         material.localization_length_nm;

  // eta = (D_e - D_h)^2 / (4 pi^2 rho u^5 hbar), evaluated in SI (result in
  // s^2) and converted to ps^2.
  const double delta_d_J = (material.deformation_e_eV -
                            material.deformation_h_eV) *
                           units::elementary_charge_C;
  const double u = material.speed_of_sound_m_s;
  const double eta_s2 =
      delta_d_J * delta_d_J /
      (4.0 * std::numbers::pi * std::numbers::pi * material.mass_density_kg_m3 *
       u * u * u * u * u * units::hbar_J_s);
  return DerivedBathParams{eta_s2 * 1e24, omega_c};
}

double spectral_density(double omega_rad_ps, const BathModel& bath) {
  require_finite(omega_rad_ps, "omega");
  if (omega_rad_ps <= 0.0) return 0.0;
  const double x = omega_rad_ps / bath.omega_c_rad_ps;
  return bath.eta_ps2 * omega_rad_ps * omega_rad_ps * omega_rad_ps *
         std::exp(-x * x);
}

double bose_einstein(double omega_rad_ps, double temperature_K) {
  require_finite(omega_rad_ps, "omega");
  if (omega_rad_ps == 0.0) {
    throw Error(ErrorKind::Divergence,
                "Bose-Einstein occupation diverges at omega = 0");
  }
  const double x = omega_rad_ps / units::thermal_frequency(temperature_K);
  return 1.0 / std::expm1(x);
}

double correlation_c(double omega_rad_ps, const BathModel& bath) {
  require_finite(omega_rad_ps, "omega");
  if (omega_rad_ps == 0.0 || bath.eta_ps2 == 0.0) return 0.0;

  // J(w) - J(-w) = eta w^3 exp(-w^2/w_c^2) on both half-lines, and
  // n(w) + 1 = 1 / (1 - exp(-x)), so both branches collapse to one formula.
  // For w < 0 the numerator and denominator are negative, keeping C >= 0.
  const double x = omega_rad_ps / units::thermal_frequency(bath.temperature_K);
  const double xc = omega_rad_ps / bath.omega_c_rad_ps;
  const double odd_j = bath.eta_ps2 * omega_rad_ps * omega_rad_ps *
                       omega_rad_ps * std::exp(-xc * xc);
  const double denominator = -std::expm1(-x);  // 1 - e^{-x}
  return kTwoPi * odd_j / denominator;
}

double spatial_correlation(double distance_nm, double r_corr_nm) {
  require_finite(distance_nm, "distance");
  if (distance_nm < 0.0) {
    throw Error(ErrorKind::InvalidArgument, "distance must be >= 0");
  }
  if (!(r_corr_nm > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "r_corr must be > 0");
  }
  return std::exp(-distance_nm / r_corr_nm);
}

double pv_hilbert(double omega0_rad_ps, const BathModel& bath,
                  double rel_tol) {
  require_finite(omega0_rad_ps, "omega0");
  bath.validate();
  if (!(rel_tol > 0.0) || rel_tol > 1e-3) {
    throw Error(ErrorKind::InvalidArgument,
                "pv_hilbert: rel_tol must lie in (0, 1e-3]");
  }
  if (bath.eta_ps2 == 0.0) return 0.0;

  // C decays as a Gaussian past omega_c on both sides, so a cutoff of
  // 10 omega_c beyond the pole bounds the truncation far below rel_tol.
  quad::PvOptions options;
  options.outer_cutoff = std::max(10.0 * bath.omega_c_rad_ps,
                                  std::abs(omega0_rad_ps) +
                                      10.0 * bath.omega_c_rad_ps);
  options.half_width = options.outer_cutoff;
  options.rel_tol = rel_tol;
  // Even a vanishing principal value (C is nearly even in the high-T limit)
  // is resolved against the natural scale of C itself.
  const double c_scale =
      correlation_c(bath.omega_c_rad_ps * std::sqrt(1.5), bath);
  options.abs_floor = std::max(1e-12 * c_scale, 1e-300);

  return quad::pv_cauchy([&](double w) { return correlation_c(w, bath); },
                         omega0_rad_ps, options)
      .value;
}

}  // namespace eet
