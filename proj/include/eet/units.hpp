#pragma once

#include <cmath>

#include "eet/errors.hpp"

// Internal unit system: frequencies in rad/ps, time in ps, length in nm,
// temperature in K. Energies cross the API boundary in meV and are converted
// here, once. Logarithmic rate tables report s^-1.

namespace eet::units {

inline constexpr double hbar_meV_ps = 0.6582119569;     // CODATA
inline constexpr double kB_meV_per_K = 0.08617333262;   // CODATA
inline constexpr double ps_inv_to_s_inv = 1.0e12;

// SI helpers used only by derive_bath_params.
inline constexpr double elementary_charge_C = 1.602176634e-19;
inline constexpr double hbar_J_s = hbar_meV_ps * 1.0e-3 * elementary_charge_C * 1.0e-12;

/// omega = E / hbar, meV -> rad/ps.
inline double energy_to_angular_frequency(double energy_meV) {
  if (!std::isfinite(energy_meV)) {
    throw Error(ErrorKind::InvalidArgument, "energy must be finite");
  }
  return energy_meV / hbar_meV_ps;
}

inline double angular_frequency_to_energy(double omega_rad_ps) {
  if (!std::isfinite(omega_rad_ps)) {
    throw Error(ErrorKind::InvalidArgument, "frequency must be finite");
  }
  return omega_rad_ps * hbar_meV_ps;
}

/// k_B T / hbar in rad/ps; the frequency scale of thermal occupation.
inline double thermal_frequency(double temperature_K) {
  if (!(temperature_K > 0.0) || !std::isfinite(temperature_K)) {
    throw Error(ErrorKind::InvalidArgument, "temperature must be > 0");
  }
  return kB_meV_per_K * temperature_K / hbar_meV_ps;
}

}  // namespace eet::units
