#pragma once

#include <Eigen/Dense>
#include <vector>

#include "eet/density.hpp"
#include "eet/redfield.hpp"
#include "eet/system.hpp"

namespace eet {

/// Generator of d(vec rho)/dt = L vec(rho) in the exciton basis, with
/// row-major vectorization (a, b) -> a N + b. Combines the coherent part
/// -i w_ab with the relaxation tensor.
struct Liouvillian {
  Eigen::MatrixXcd matrix;  // N^2 x N^2, rad/ps
  int n_states = 0;
};

Liouvillian build_liouvillian(const ExcitonBasis& basis,
                              const RedfieldTensor& tensor);

enum class Method { Rk4, Expm };

const char* to_string(Method method);

struct EvolveOptions {
  double t_final_ps = 1000.0;
  double dt_ps = 0.0;  // 0 = default_time_step
  int stride = 1000;   // output every stride steps
  Method method = Method::Expm;
};

struct Trajectory {
  std::vector<double> times_ps;
  std::vector<Eigen::MatrixXcd> states;  // exciton basis
  std::vector<Eigen::VectorXd> site_populations;
  std::vector<Eigen::VectorXd> coherence_mags;  // |rho_ab|, a < b, row-major
  std::vector<double> traces;
  std::vector<double> min_eigenvalues;

  int steps() const { return static_cast<int>(times_ps.size()); }
};

/// dt = min(0.05 * 2 pi / max|w_ab|, 0.05 / max|R_ab,cd|), capped at
/// 0.001 ps: resolves the fastest phase rotation and the fastest decay.
double default_time_step(const ExcitonBasis& basis,
                         const RedfieldTensor& tensor);

/// Propagates rho0 (converted to the exciton basis if needed) to t_final.
/// Expm exponentiates the generator once per output interval; rk4 takes
/// fixed steps of dt. Trace drift beyond 1e-6 raises Instability; a state
/// eigenvalue below -1e-3 raises InvalidArgument (negativity), below -1e-6
/// logs a warning.
Trajectory evolve(const Liouvillian& liouvillian, const ExcitonBasis& basis,
                  const DensityMatrix& rho0, const EvolveOptions& options);

/// Diagonal Boltzmann state over the exciton energies.
DensityMatrix thermal_state(const ExcitonBasis& basis, double temperature_K);

/// Diagonal of the site-basis representation.
Eigen::VectorXd site_populations(const DensityMatrix& state,
                                 const Eigen::MatrixXd& U);

/// Steady state of the population block dp_a/dt = sum_b R_aa,bb p_b, the
/// fixed point the secular dynamics relax to.
Eigen::VectorXd population_steady_state(const RedfieldTensor& tensor);

/// Kernel of the full Liouvillian, normalized to unit trace. `reliable` is
/// false when the zero eigenvalue is not isolated (e.g. coherent evolution).
struct SteadyStateReport {
  Eigen::VectorXd site_populations;
  Eigen::VectorXd exciton_populations;
  bool reliable = false;
  double spectral_gap = 0.0;  // smallest nonzero |lambda|, the slowest mode
};

SteadyStateReport full_steady_state(const Liouvillian& liouvillian,
                                    const Eigen::MatrixXd& U);

}  // namespace eet
