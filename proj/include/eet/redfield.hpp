#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "eet/bath.hpp"
#include "eet/system.hpp"

namespace eet {

/// System factor of the relaxation kernel,
///   zeta_ab,cd = sum_nm U_na U_nb U_mc U_md exp(-R_mn / R_corr),
/// stored dense (N <= 10 by default).
class ZetaTensor {
 public:
  explicit ZetaTensor(int n_states);

  int size() const { return n_; }
  double operator()(int a, int b, int c, int d) const {
    return data_[index(a, b, c, d)];
  }
  double& at(int a, int b, int c, int d) { return data_[index(a, b, c, d)]; }

 private:
  int index(int a, int b, int c, int d) const {
    return ((a * n_ + b) * n_ + c) * n_ + d;
  }
  int n_;
  std::vector<double> data_;
};

ZetaTensor compute_zeta(const ExcitonBasis& basis,
                        const Eigen::MatrixXd& distances_nm, double r_corr_nm);

struct RedfieldOptions {
  bool secular = false;
  bool lamb_shift = true;
  double grouping_tol = 1e-9;  // rad/ps, secular frequency grouping
  double pv_rel_tol = 1e-8;
  int max_states = 10;
};

/// Full non-secular relaxation tensor R_ab,cd in rad/ps together with the
/// transition frequencies it was built at.
class RedfieldTensor {
 public:
  RedfieldTensor(int n_states, Eigen::MatrixXd omega, bool secular_applied,
                 bool lamb_shift_included);

  int size() const { return n_; }
  std::complex<double> operator()(int a, int b, int c, int d) const {
    return data_[index(a, b, c, d)];
  }
  std::complex<double>& at(int a, int b, int c, int d) {
    return data_[index(a, b, c, d)];
  }

  /// omega(a, b) = eps_a - eps_b.
  const Eigen::MatrixXd& omega() const { return omega_; }
  bool secular_applied() const { return secular_applied_; }
  bool lamb_shift_included() const { return lamb_shift_included_; }

  double max_abs() const;

  /// max_cd |sum_a R_aa,cd|; zero for a trace-preserving generator.
  double trace_defect() const;
  /// max |R_ab,cd - conj(R_ba,dc)|.
  double hermiticity_defect() const;

 private:
  friend RedfieldTensor secular_filter(const RedfieldTensor&, double);
  int index(int a, int b, int c, int d) const {
    return ((a * n_ + b) * n_ + c) * n_ + d;
  }
  int n_;
  Eigen::MatrixXd omega_;
  bool secular_applied_;
  bool lamb_shift_included_;
  std::vector<std::complex<double>> data_;
};

/// One half-Fourier bath element,
///   Gamma_ab,cd(w) = 1/2 zeta_ab,cd C(w) + i/(2 pi) zeta_ab,cd PV(w),
/// with the PV term dropped when lamb_shift is off.
std::complex<double> compute_gamma(const ZetaTensor& zeta, int a, int b, int c,
                                   int d, double omega_rad_ps,
                                   const BathModel& bath, bool lamb_shift,
                                   double pv_rel_tol = 1e-8);

/// Assembles
///   R_ab,cd = Gamma_db,ac(w_ca) + Gamma*_ca,bd(w_db)
///             - delta_bd sum_e Gamma_ae,ec(w_ce)
///             - delta_ac sum_e Gamma*_be,ed(w_de).
/// Gamma is cached per frequency pair; with options.secular the result is
/// filtered after assembly.
RedfieldTensor assemble_tensor(const ExcitonBasis& basis,
                               const ZetaTensor& zeta, const BathModel& bath,
                               const RedfieldOptions& options = {});

/// Zeroes every element with |w_ab - w_cd| > grouping_tol.
RedfieldTensor secular_filter(const RedfieldTensor& tensor,
                              double grouping_tol);

/// Population transfer rates k_ab = R_bb,aa = zeta_ab,ba C(w_ab), kept
/// factored so the system and bath contributions stay inspectable.
struct RateMatrix {
  Eigen::MatrixXd k_ps_inv;    // k_ab, zero diagonal
  Eigen::MatrixXd zeta_part;   // zeta_ab,ba
  Eigen::MatrixXd c_part;      // C(w_ab), ps^-1

  int size() const { return static_cast<int>(k_ps_inv.rows()); }
};

RateMatrix compute_rates(const ZetaTensor& zeta, const ExcitonBasis& basis,
                         const BathModel& bath);

}  // namespace eet
