#pragma once

#include <functional>

namespace eet::quad {

struct PvResult {
  double value = 0.0;
  double rel_error = 0.0;  // achieved |I_2m - I_m| / max(|I_2m|, floor)
  int evaluations = 0;
};

struct PvOptions {
  double half_width = 0.0;    // window half-width L around omega0
  double outer_cutoff = 0.0;  // integrate over [-Omega, Omega]
  double rel_tol = 1e-8;
  double abs_floor = 1e-300;  // scale guard for near-zero integrals
  int max_panels = 4096;
};

/// Composite 15-point Gauss-Legendre over [a, b] split into `panels` panels.
double gauss_legendre(const std::function<double(double)>& f, double a,
                      double b, int panels);

/// Cauchy principal value of int f(w) / (omega0 - w) dw over
/// [-Omega, Omega]. The window [omega0 - L, omega0 + L] is folded
/// symmetrically, int_0^L (f(omega0-u) - f(omega0+u)) / u du, which removes
/// the pole exactly; outside the window the integrand is regular. Panel
/// counts double until two refinements agree to rel_tol; on budget exhaustion
/// throws QuadratureError carrying the best estimate.
PvResult pv_cauchy(const std::function<double(double)>& f, double omega0,
                   const PvOptions& options);

}  // namespace eet::quad
