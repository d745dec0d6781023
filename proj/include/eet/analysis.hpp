#pragma once

#include <vector>

#include "eet/bath.hpp"
#include "eet/redfield.hpp"
#include "eet/system.hpp"

namespace eet {

/// One line of the factored-rate table. Logs are base 10 with C and k in
/// s^-1; log10_k is the exact sum of the other two columns. Zero rates carry
/// -inf sentinels.
struct RateTableRow {
  int from_state = 0;  // 1-based eigenstate labels
  int to_state = 0;
  double log10_zeta = 0.0;
  double log10_c_s = 0.0;
  double log10_k_s = 0.0;
  double k_ps_inv = 0.0;
};

/// All ordered pairs, sorted by source state then destination.
std::vector<RateTableRow> rate_table(const RateMatrix& rates);

struct TransferTarget {
  bool has_transfer = false;
  int to_state = -1;  // 0-based eigenstate index
  int site = -1;      // 0-based site index, argmax_n |U_n,to|^2
  double rate_ps_inv = 0.0;
};

/// Largest outgoing rate from eigenstate `from_state` and the site its
/// destination eigenstate lives on. Ties break to the lowest index; an
/// all-zero row reports has_transfer = false.
TransferTarget dominant_target(const RateMatrix& rates,
                               const ExcitonBasis& basis, int from_state);

/// How to realize H -> s H in a scan. EnergyOnly rescales the eigenvalues
/// directly (U and zeta fixed); Geometry rescales site energies by s and
/// distances by s^(-1/3) so the dipole couplings scale physically, which
/// perturbs zeta through the spatial kernel.
enum class ScanMode { EnergyOnly, Geometry };

struct ScanResult {
  double factor = 1.0;
  int from_state = 0;      // 0-based initial eigenstate
  TransferTarget target;
  double directedness = 0.0;  // dominant rate / sum of competing rates
  RateMatrix rates;
};

std::vector<ScanResult> scale_scan(const SiteNetwork& network,
                                   const BathModel& bath,
                                   int initial_exciton_state,
                                   const std::vector<double>& factors,
                                   ScanMode mode);

}  // namespace eet
