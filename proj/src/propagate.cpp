#include "eet/propagate.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "eet/log.hpp"
#include "eet/units.hpp"

namespace eet {

namespace {

using Complex = std::complex<double>;

Eigen::VectorXcd vectorize(const Eigen::MatrixXcd& rho) {
  const int n = static_cast<int>(rho.rows());
  Eigen::VectorXcd v(n * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) v(a * n + b) = rho(a, b);
  }
  return v;
}

Eigen::MatrixXcd devectorize(const Eigen::VectorXcd& v, int n) {
  Eigen::MatrixXcd rho(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) rho(a, b) = v(a * n + b);
  }
  return rho;
}

}  // namespace

const char* to_string(Method method) {
  return method == Method::Rk4 ? "rk4" : "expm";
}

Liouvillian build_liouvillian(const ExcitonBasis& basis,
                              const RedfieldTensor& tensor) {
  const int n = basis.size();
  if (tensor.size() != n) {
    throw Error(ErrorKind::InvalidArgument,
                "build_liouvillian: basis and tensor dimensions differ");
  }
  Liouvillian liouvillian;
  liouvillian.n_states = n;
  liouvillian.matrix = Eigen::MatrixXcd::Zero(n * n, n * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int row = a * n + b;
      liouvillian.matrix(row, row) += Complex(0.0, -basis.omega(a, b));
      for (int c = 0; c < n; ++c) {
        for (int d = 0; d < n; ++d) {
          liouvillian.matrix(row, c * n + d) += tensor(a, b, c, d);
        }
      }
    }
  }
  return liouvillian;
}

double default_time_step(const ExcitonBasis& basis,
                         const RedfieldTensor& tensor) {
  double dt = 0.001;  // cap: 1e6 steps per ns
  double max_omega = 0.0;
  for (int a = 0; a < basis.size(); ++a) {
    for (int b = 0; b < basis.size(); ++b) {
      max_omega = std::max(max_omega, std::abs(basis.omega(a, b)));
    }
  }
  if (max_omega > 0.0) {
    dt = std::min(dt, 0.05 * 2.0 * std::numbers::pi / max_omega);
  }
  const double max_rate = tensor.max_abs();
  if (max_rate > 0.0) {
    dt = std::min(dt, 0.05 / max_rate);
  }
  return dt;
}

namespace {

struct Recorder {
  const ExcitonBasis& basis;
  Trajectory& trajectory;
  Method method;
  double worst_eigenvalue = 0.0;
  double worst_eigenvalue_t_ps = 0.0;

  // Non-secular Redfield is not completely positive, so mild transient
  // negativity is expected physics of the method; one summary warning per
  // trajectory keeps it visible without flooding the log.
  void finish() const {
    if (worst_eigenvalue < -1e-6) {
      log::warn("density matrix transiently negative (worst eigenvalue " +
                std::to_string(worst_eigenvalue) + " at t = " +
                std::to_string(worst_eigenvalue_t_ps) + " ps)");
    }
  }

  void record(double t_ps, const Eigen::MatrixXcd& rho) {
    const int n = static_cast<int>(rho.rows());
    const double trace = rho.trace().real();
    if (std::abs(trace - 1.0) > 1e-6) {
      throw Error(ErrorKind::Instability,
                  "trace drifted to " + std::to_string(trace) + " at t = " +
                      std::to_string(t_ps) + " ps" +
                      (method == Method::Rk4 ? "; reduce dt" : ""));
    }
    // Density-matrix entries are bounded by 1; growth past that is a
    // diverging integration, which rk4 reaches with trace intact.
    if (rho.cwiseAbs().maxCoeff() > 2.0) {
      throw Error(ErrorKind::Instability,
                  "state norm exploded at t = " + std::to_string(t_ps) +
                      " ps" + (method == Method::Rk4 ? "; reduce dt" : ""));
    }
    DensityMatrix state{rho, Basis::Exciton};
    const double min_eig = state.min_eigenvalue();
    if (min_eig < -1e-3) {
      throw Error(ErrorKind::PhysicsError,
                  "density matrix lost positivity (min eigenvalue " +
                      std::to_string(min_eig) + " at t = " +
                      std::to_string(t_ps) + " ps)" +
                      (method == Method::Rk4
                           ? "; with rk4 this can also mean dt is too large"
                           : ""));
    }
    if (min_eig < worst_eigenvalue) {
      worst_eigenvalue = min_eig;
      worst_eigenvalue_t_ps = t_ps;
    }

    trajectory.times_ps.push_back(t_ps);
    trajectory.states.push_back(rho);
    trajectory.site_populations.push_back(site_populations(state, basis.U));
    Eigen::VectorXd coherences(n * (n - 1) / 2);
    int k = 0;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) coherences(k++) = std::abs(rho(a, b));
    }
    trajectory.coherence_mags.push_back(coherences);
    trajectory.traces.push_back(trace);
    trajectory.min_eigenvalues.push_back(min_eig);
  }
};

}  // namespace

Trajectory evolve(const Liouvillian& liouvillian, const ExcitonBasis& basis,
                  const DensityMatrix& rho0, const EvolveOptions& options) {
  const int n = basis.size();
  if (liouvillian.n_states != n) {
    throw Error(ErrorKind::InvalidArgument,
                "evolve: Liouvillian and basis dimensions differ");
  }
  if (rho0.rho.rows() != n) {
    throw Error(ErrorKind::InvalidArgument,
                "evolve: initial state dimension mismatch");
  }
  const double dt = options.dt_ps;
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw Error(ErrorKind::InvalidArgument, "evolve: dt must be > 0");
  }
  if (options.t_final_ps < dt) {
    throw Error(ErrorKind::InvalidArgument, "evolve: t_final must be >= dt");
  }
  if (options.stride < 1) {
    throw Error(ErrorKind::InvalidArgument, "evolve: stride must be >= 1");
  }

  const DensityMatrix rho_exciton =
      transform_density(rho0, Basis::Exciton, basis.U);

  const long long total_steps = std::llround(options.t_final_ps / dt);
  const long long stride = options.stride;

  Trajectory trajectory;
  Recorder recorder{basis, trajectory, options.method};
  recorder.record(0.0, rho_exciton.rho);

  if (options.method == Method::Expm) {
    // One Pade exponentiation per distinct interval; exp(L k Delta) is then
    // the exact k-th power, so output states sit on the exact flow.
    const Eigen::MatrixXcd interval =
        (liouvillian.matrix * (dt * static_cast<double>(stride))).exp();
    Eigen::VectorXcd v = vectorize(rho_exciton.rho);
    long long step = 0;
    while (step + stride <= total_steps) {
      v = interval * v;
      step += stride;
      recorder.record(static_cast<double>(step) * dt, devectorize(v, n));
    }
    if (step < total_steps) {
      const Eigen::MatrixXcd remainder =
          (liouvillian.matrix * (dt * static_cast<double>(total_steps - step)))
              .exp();
      v = remainder * v;
      recorder.record(static_cast<double>(total_steps) * dt,
                      devectorize(v, n));
    }
    recorder.finish();
    return trajectory;
  }

  // Classic fixed-step rk4 on the vectorized master equation.
  const Eigen::MatrixXcd& l = liouvillian.matrix;
  Eigen::VectorXcd v = vectorize(rho_exciton.rho);
  Eigen::VectorXcd k1(n * n), k2(n * n), k3(n * n), k4(n * n);
  for (long long step = 1; step <= total_steps; ++step) {
    k1.noalias() = l * v;
    k2.noalias() = l * (v + (0.5 * dt) * k1);
    k3.noalias() = l * (v + (0.5 * dt) * k2);
    k4.noalias() = l * (v + dt * k3);
    v += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (step % stride == 0 || step == total_steps) {
      recorder.record(static_cast<double>(step) * dt, devectorize(v, n));
    }
  }
  recorder.finish();
  return trajectory;
}

DensityMatrix thermal_state(const ExcitonBasis& basis, double temperature_K) {
  const double omega_thermal = units::thermal_frequency(temperature_K);
  const int n = basis.size();
  const double floor = basis.energies_rad_ps.minCoeff();
  Eigen::VectorXd weights(n);
  for (int a = 0; a < n; ++a) {
    weights(a) = std::exp(-(basis.energies_rad_ps(a) - floor) / omega_thermal);
  }
  weights /= weights.sum();

  DensityMatrix state;
  state.basis = Basis::Exciton;
  state.rho = weights.cast<Complex>().asDiagonal();
  return state;
}

Eigen::VectorXd site_populations(const DensityMatrix& state,
                                 const Eigen::MatrixXd& U) {
  if (state.rho.rows() != U.rows()) {
    throw Error(ErrorKind::InvalidArgument,
                "site_populations: dimension mismatch");
  }
  if (state.basis == Basis::Site) {
    return state.rho.diagonal().real();
  }
  return (U * state.rho * U.transpose()).diagonal().real();
}

Eigen::VectorXd population_steady_state(const RedfieldTensor& tensor) {
  const int n = tensor.size();
  Eigen::MatrixXd generator(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      generator(a, b) = tensor(a, a, b, b).real();
    }
  }
  const Eigen::EigenSolver<Eigen::MatrixXd> solver(generator);
  int best = 0;
  for (int i = 1; i < n; ++i) {
    if (std::abs(solver.eigenvalues()(i)) <
        std::abs(solver.eigenvalues()(best))) {
      best = i;
    }
  }
  Eigen::VectorXd populations = solver.eigenvectors().col(best).real();
  const double total = populations.sum();
  if (std::abs(total) < 1e-12) {
    throw Error(ErrorKind::InvalidArgument,
                "population steady state is not normalizable "
                "(disconnected rate graph?)");
  }
  return populations / total;
}

SteadyStateReport full_steady_state(const Liouvillian& liouvillian,
                                    const Eigen::MatrixXd& U) {
  const int n = liouvillian.n_states;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(liouvillian.matrix);

  int zero_index = 0;
  double min_abs = std::numeric_limits<double>::infinity();
  for (int i = 0; i < solver.eigenvalues().size(); ++i) {
    const double mag = std::abs(solver.eigenvalues()(i));
    if (mag < min_abs) {
      min_abs = mag;
      zero_index = i;
    }
  }
  double second = std::numeric_limits<double>::infinity();
  for (int i = 0; i < solver.eigenvalues().size(); ++i) {
    if (i == zero_index) continue;
    second = std::min(second, std::abs(solver.eigenvalues()(i)));
  }

  SteadyStateReport report;
  Eigen::MatrixXcd rho = devectorize(solver.eigenvectors().col(zero_index), n);
  rho = 0.5 * (rho + rho.adjoint().eval());
  const Complex trace = rho.trace();
  // A slowest mode under 1e-6 rad/ps (relaxation beyond a microsecond) is
  // numerically inseparable from the kernel and physically unresolved at the
  // nanosecond horizon this tool targets.
  report.reliable =
      min_abs < 1e-9 && second > 1e-6 && std::abs(trace) > 1e-6;
  report.spectral_gap = second;
  if (std::abs(trace) > 1e-12) {
    rho /= trace;
    report.exciton_populations = rho.diagonal().real();
    report.site_populations =
        site_populations(DensityMatrix{rho, Basis::Exciton}, U);
    if (report.exciton_populations.minCoeff() < -1e-6 ||
        report.site_populations.minCoeff() < -1e-6) {
      report.reliable = false;
    }
  } else {
    report.exciton_populations = Eigen::VectorXd::Zero(n);
    report.site_populations = Eigen::VectorXd::Zero(n);
    report.reliable = false;
  }
  return report;
}

}  // namespace eet
