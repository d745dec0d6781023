#include "eet/analysis.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "eet/units.hpp"

namespace eet {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log10_or_sentinel(double value) {
  return value > 0.0 ? std::log10(value) : kNegInf;
}

}  // namespace

std::vector<RateTableRow> rate_table(const RateMatrix& rates) {
  const int n = rates.size();
  std::vector<RateTableRow> rows;
  rows.reserve(static_cast<size_t>(n) * (n - 1));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      RateTableRow row;
      row.from_state = a + 1;
      row.to_state = b + 1;
      row.log10_zeta = log10_or_sentinel(rates.zeta_part(a, b));
      row.log10_c_s =
          log10_or_sentinel(rates.c_part(a, b) * units::ps_inv_to_s_inv);
      // The table is a reformatting of the factored rate: the k column is
      // the exact sum of the other two, never a separate computation.
      row.log10_k_s = row.log10_zeta + row.log10_c_s;
      row.k_ps_inv = rates.k_ps_inv(a, b);
      rows.push_back(row);
    }
  }
  return rows;
}

TransferTarget dominant_target(const RateMatrix& rates,
                               const ExcitonBasis& basis, int from_state) {
  const int n = rates.size();
  if (from_state < 0 || from_state >= n) {
    throw Error(ErrorKind::InvalidArgument,
                "dominant_target: eigenstate index " +
                    std::to_string(from_state) + " out of range");
  }
  TransferTarget target;
  for (int b = 0; b < n; ++b) {
    if (b == from_state) continue;
    if (rates.k_ps_inv(from_state, b) > target.rate_ps_inv) {
      target.rate_ps_inv = rates.k_ps_inv(from_state, b);
      target.to_state = b;
    }
  }
  if (target.to_state < 0) return target;  // all rates zero: no transfer

  target.has_transfer = true;
  int site = 0;
  for (int m = 1; m < n; ++m) {
    if (basis.U(m, target.to_state) * basis.U(m, target.to_state) >
        basis.U(site, target.to_state) * basis.U(site, target.to_state)) {
      site = m;
    }
  }
  target.site = site;
  return target;
}

namespace {

SiteNetwork rescale_network(const SiteNetwork& network, double factor) {
  // H -> s H realized physically: energies scale by s and distances by
  // s^(-1/3) so the R^-3 dipole couplings scale by s as well.
  const double length_scale = std::pow(factor, -1.0 / 3.0);
  std::vector<Site> sites = network.sites();
  for (Site& site : sites) {
    site.position_nm *= length_scale;
    site.energy_meV *= factor;
  }
  CouplingRule coupling = network.coupling();
  if (auto* explicit_j = std::get_if<ExplicitCouplings>(&coupling)) {
    explicit_j->matrix_meV *= factor;
  }
  return SiteNetwork(std::move(sites), std::move(coupling));
}

double directedness_of(const RateMatrix& rates, const TransferTarget& target,
                       int from_state) {
  if (!target.has_transfer) return 0.0;
  double competing = 0.0;
  for (int b = 0; b < rates.size(); ++b) {
    if (b == from_state || b == target.to_state) continue;
    competing += rates.k_ps_inv(from_state, b);
  }
  if (competing == 0.0) return std::numeric_limits<double>::infinity();
  return target.rate_ps_inv / competing;
}

}  // namespace

std::vector<ScanResult> scale_scan(const SiteNetwork& network,
                                   const BathModel& bath,
                                   int initial_exciton_state,
                                   const std::vector<double>& factors,
                                   ScanMode mode) {
  bath.validate();
  for (double factor : factors) {
    if (!(factor > 0.0) || !std::isfinite(factor)) {
      throw Error(ErrorKind::InvalidArgument,
                  "scale factors must be finite and > 0");
    }
  }

  const SiteHamiltonian base_h = build_hamiltonian(network);
  const ExcitonBasis base_basis = diagonalize(base_h);
  if (initial_exciton_state < 0 || initial_exciton_state >= base_basis.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "scale_scan: initial eigenstate out of range");
  }
  const ZetaTensor base_zeta =
      compute_zeta(base_basis, base_h.distances_nm, bath.r_corr_nm);

  std::vector<ScanResult> results;
  results.reserve(factors.size());
  for (double factor : factors) {
    ScanResult result;
    result.factor = factor;
    result.from_state = initial_exciton_state;
    if (mode == ScanMode::EnergyOnly) {
      ExcitonBasis scaled = base_basis;
      scaled.energies_rad_ps *= factor;
      result.rates = compute_rates(base_zeta, scaled, bath);
      result.target = dominant_target(result.rates, scaled,
                                      initial_exciton_state);
    } else {
      const SiteNetwork scaled_network = rescale_network(network, factor);
      const SiteHamiltonian h = build_hamiltonian(scaled_network);
      const ExcitonBasis basis = diagonalize(h);
      const ZetaTensor zeta =
          compute_zeta(basis, h.distances_nm, bath.r_corr_nm);
      result.rates = compute_rates(zeta, basis, bath);
      result.target =
          dominant_target(result.rates, basis, initial_exciton_state);
    }
    result.directedness =
        directedness_of(result.rates, result.target, initial_exciton_state);
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace eet
