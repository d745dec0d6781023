#pragma once

#include "eet/errors.hpp"
#include "eet/quadrature.hpp"

namespace eet {

/// Super-ohmic deformation-potential bath,
///   J(w) = Theta(w) eta w^3 exp(-w^2 / w_c^2),
/// with an exponential spatial correlation kernel exp(-R / R_corr) and a
/// thermal occupation at fixed temperature.
struct BathModel {
  double eta_ps2 = 0.035;
  double omega_c_rad_ps = 1.41;
  double r_corr_nm = 3.0;
  double temperature_K = 10.0;

  /// GaAs quantum dots at low temperature.
  static BathModel gaas_10k() { return BathModel{0.035, 1.41, 3.0, 10.0}; }

  /// Throws InvalidArgument unless eta >= 0, omega_c > 0, r_corr > 0, T > 0.
  void validate() const;
};

/// Material constants behind the deformation-potential coupling.
struct MaterialParams {
  double deformation_e_eV;   // electron deformation potential
  double deformation_h_eV;   // hole deformation potential
  double mass_density_kg_m3;
  double speed_of_sound_m_s;
  double localization_length_nm;
};

struct DerivedBathParams {
  double eta_ps2;
  double omega_c_rad_ps;
};

/// eta = (D_e - D_h)^2 / (4 pi^2 rho u^5 hbar), omega_c = sqrt(2) u / l,
/// converted into the internal unit system.
DerivedBathParams derive_bath_params(const MaterialParams& material);

/// J(w) in ps^-1; identically zero for w <= 0.
double spectral_density(double omega_rad_ps, const BathModel& bath);

/// Bose-Einstein occupation 1 / (exp(hbar w / k_B T) - 1). Defined for
/// negative w (returns values below -1); throws Divergence at w = 0.
double bose_einstein(double omega_rad_ps, double temperature_K);

/// Frequency correlation function
///   C(w) = 2 pi [n(w) + 1] (J(w) - J(-w)),
/// in ps^-1. Nonnegative for all w, continuous at 0 with C(0) = 0, and obeys
/// detailed balance C(-w) = exp(-hbar w / k_B T) C(w).
double correlation_c(double omega_rad_ps, const BathModel& bath);

/// exp(-R / R_corr); spatial decay of bath cross-correlations.
double spatial_correlation(double distance_nm, double r_corr_nm);

/// Cauchy principal value of int C(w) / (omega0 - w) dw over the real line,
/// the frequency-renormalization (Lamb shift) kernel. rel_tol must lie in
/// (0, 1e-3].
double pv_hilbert(double omega0_rad_ps, const BathModel& bath,
                  double rel_tol = 1e-8);

}  // namespace eet
