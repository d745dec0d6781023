#include "eet/redfield.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

namespace eet {

namespace {

using Complex = std::complex<double>;

void require_same_dimension(int a, int b, const char* what) {
  if (a != b) {
    throw Error(ErrorKind::InvalidArgument,
                std::string(what) + ": dimension mismatch (" +
                    std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

ZetaTensor::ZetaTensor(int n_states) : n_(n_states) {
  if (n_states < 1) {
    throw Error(ErrorKind::InvalidArgument, "zeta tensor needs n >= 1");
  }
  data_.assign(static_cast<size_t>(n_) * n_ * n_ * n_, 0.0);
}

ZetaTensor compute_zeta(const ExcitonBasis& basis,
                        const Eigen::MatrixXd& distances_nm,
                        double r_corr_nm) {
  const int n = basis.size();
  require_same_dimension(static_cast<int>(distances_nm.rows()), n,
                         "compute_zeta");
  require_same_dimension(static_cast<int>(distances_nm.cols()), n,
                         "compute_zeta");

  Eigen::MatrixXd kernel(n, n);
  for (int m = 0; m < n; ++m) {
    for (int k = 0; k < n; ++k) {
      kernel(m, k) = spatial_correlation(distances_nm(m, k), r_corr_nm);
    }
  }

  // zeta_ab,cd = v_ab . K v_cd with v_ab[n] = U_na U_nb: stack the N^2
  // pair vectors as columns and form V^T K V in one shot.
  Eigen::MatrixXd pair_vectors(n, n * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      pair_vectors.col(a * n + b) =
          basis.U.col(a).cwiseProduct(basis.U.col(b));
    }
  }
  const Eigen::MatrixXd zeta_matrix =
      pair_vectors.transpose() * kernel * pair_vectors;

  ZetaTensor zeta(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        for (int d = 0; d < n; ++d) {
          zeta.at(a, b, c, d) = zeta_matrix(a * n + b, c * n + d);
        }
      }
    }
  }
  return zeta;
}

RedfieldTensor::RedfieldTensor(int n_states, Eigen::MatrixXd omega,
                               bool secular_applied, bool lamb_shift_included)
    : n_(n_states),
      omega_(std::move(omega)),
      secular_applied_(secular_applied),
      lamb_shift_included_(lamb_shift_included) {
  data_.assign(static_cast<size_t>(n_) * n_ * n_ * n_, Complex(0.0, 0.0));
}

double RedfieldTensor::max_abs() const {
  double m = 0.0;
  for (const Complex& v : data_) m = std::max(m, std::abs(v));
  return m;
}

double RedfieldTensor::trace_defect() const {
  double worst = 0.0;
  for (int c = 0; c < n_; ++c) {
    for (int d = 0; d < n_; ++d) {
      Complex column_sum(0.0, 0.0);
      for (int a = 0; a < n_; ++a) column_sum += (*this)(a, a, c, d);
      worst = std::max(worst, std::abs(column_sum));
    }
  }
  return worst;
}

double RedfieldTensor::hermiticity_defect() const {
  double worst = 0.0;
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      for (int c = 0; c < n_; ++c) {
        for (int d = 0; d < n_; ++d) {
          const Complex diff =
              (*this)(a, b, c, d) - std::conj((*this)(b, a, d, c));
          worst = std::max(worst, std::abs(diff));
        }
      }
    }
  }
  return worst;
}

std::complex<double> compute_gamma(const ZetaTensor& zeta, int a, int b, int c,
                                   int d, double omega_rad_ps,
                                   const BathModel& bath, bool lamb_shift,
                                   double pv_rel_tol) {
  const double z = zeta(a, b, c, d);
  if (z == 0.0) return Complex(0.0, 0.0);
  const double real_part = 0.5 * z * correlation_c(omega_rad_ps, bath);
  double imag_part = 0.0;
  if (lamb_shift) {
    imag_part = z / (2.0 * std::numbers::pi) *
                pv_hilbert(omega_rad_ps, bath, pv_rel_tol);
  }
  return Complex(real_part, imag_part);
}

RedfieldTensor assemble_tensor(const ExcitonBasis& basis,
                               const ZetaTensor& zeta, const BathModel& bath,
                               const RedfieldOptions& options) {
  bath.validate();
  const int n = basis.size();
  require_same_dimension(zeta.size(), n, "assemble_tensor");
  if (n > options.max_states) {
    throw Error(ErrorKind::InvalidArgument,
                "dense tensor assembly limited to " +
                    std::to_string(options.max_states) +
                    " states (configurable)");
  }

  Eigen::MatrixXd omega(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) omega(a, b) = basis.omega(a, b);
  }

  // Scalar bath kernel g(s, r) = 1/2 C(w_sr) + i/(2 pi) PV(w_sr); every
  // Gamma is zeta times one of these N^2 values. The PV quadrature dominates
  // assembly cost, so it is evaluated once per ordered pair.
  Eigen::MatrixXcd g(n, n);
  for (int s = 0; s < n; ++s) {
    for (int r = 0; r < n; ++r) {
      const double w = omega(s, r);
      double imag_part = 0.0;
      if (options.lamb_shift) {
        imag_part = pv_hilbert(w, bath, options.pv_rel_tol) /
                    (2.0 * std::numbers::pi);
      }
      g(s, r) = Complex(0.5 * correlation_c(w, bath), imag_part);
    }
  }

  // Contractions behind the Kronecker terms: S1(a, c) = sum_e zeta_ae,ec
  // g(c, e) and S2(b, d) = sum_e zeta_be,ed conj(g(d, e)).
  Eigen::MatrixXcd s1 = Eigen::MatrixXcd::Zero(n, n);
  Eigen::MatrixXcd s2 = Eigen::MatrixXcd::Zero(n, n);
  for (int a = 0; a < n; ++a) {
    for (int c = 0; c < n; ++c) {
      for (int e = 0; e < n; ++e) {
        s1(a, c) += zeta(a, e, e, c) * g(c, e);
        s2(a, c) += zeta(a, e, e, c) * std::conj(g(c, e));
      }
    }
  }

  RedfieldTensor tensor(n, omega, false, options.lamb_shift);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        for (int d = 0; d < n; ++d) {
          Complex value = zeta(d, b, a, c) * g(c, a) +
                          zeta(c, a, b, d) * std::conj(g(d, b));
          if (b == d) value -= s1(a, c);
          if (a == c) value -= s2(b, d);
          tensor.at(a, b, c, d) = value;
        }
      }
    }
  }

  const double scale = tensor.max_abs();
  if (tensor.trace_defect() > 1e-12 * std::max(scale, 1e-30)) {
    throw std::logic_error("assembled Redfield tensor is not trace-preserving");
  }
  if (tensor.hermiticity_defect() > 1e-12 * std::max(scale, 1e-30)) {
    throw std::logic_error(
        "assembled Redfield tensor violates Hermiticity compatibility");
  }

  if (options.secular) {
    return secular_filter(tensor, options.grouping_tol);
  }
  return tensor;
}

RedfieldTensor secular_filter(const RedfieldTensor& tensor,
                              double grouping_tol) {
  if (!(grouping_tol >= 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "grouping_tol must be >= 0");
  }
  RedfieldTensor filtered = tensor;
  filtered.secular_applied_ = true;
  const int n = tensor.size();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        for (int d = 0; d < n; ++d) {
          const double detuning =
              std::abs(tensor.omega()(a, b) - tensor.omega()(c, d));
          if (detuning > grouping_tol) {
            filtered.at(a, b, c, d) = std::complex<double>(0.0, 0.0);
          }
        }
      }
    }
  }
  const double scale = filtered.max_abs();
  if (filtered.trace_defect() > 1e-12 * std::max(scale, 1e-30)) {
    throw std::logic_error("secular filter broke trace preservation");
  }
  return filtered;
}

RateMatrix compute_rates(const ZetaTensor& zeta, const ExcitonBasis& basis,
                         const BathModel& bath) {
  bath.validate();
  const int n = basis.size();
  require_same_dimension(zeta.size(), n, "compute_rates");

  RateMatrix rates;
  rates.k_ps_inv = Eigen::MatrixXd::Zero(n, n);
  rates.zeta_part = Eigen::MatrixXd::Zero(n, n);
  rates.c_part = Eigen::MatrixXd::Zero(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      rates.zeta_part(a, b) = zeta(a, b, b, a);
      rates.c_part(a, b) = correlation_c(basis.omega(a, b), bath);
      rates.k_ps_inv(a, b) = rates.zeta_part(a, b) * rates.c_part(a, b);
    }
  }
  return rates;
}

}  // namespace eet
