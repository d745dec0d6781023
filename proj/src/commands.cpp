#include "eet/commands.hpp"

#include <json.hpp>

#include <cmath>
#include <iostream>
#include <string>

#include "eet/log.hpp"
#include "eet/output.hpp"
#include "eet/scenario.hpp"
#include "eet/units.hpp"

namespace eet {

namespace {

using nlohmann::json;

struct Prepared {
  Scenario scenario;
  SiteHamiltonian hamiltonian;
  ExcitonBasis basis;
  ZetaTensor zeta;
  RedfieldTensor tensor;
};

void apply_overrides(Scenario& scenario, const CommandOverrides& overrides) {
  if (overrides.secular) scenario.options.secular = *overrides.secular;
  if (overrides.lamb_shift) {
    scenario.options.lamb_shift = *overrides.lamb_shift;
  }
  if (overrides.method) scenario.options.method = *overrides.method;
}

Prepared prepare(const std::filesystem::path& scenario_path,
                 const CommandOverrides& overrides) {
  Scenario scenario = load_scenario(scenario_path);
  apply_overrides(scenario, overrides);

  SiteHamiltonian hamiltonian = build_hamiltonian(scenario.network);
  ExcitonBasis basis = diagonalize(hamiltonian);
  ZetaTensor zeta = compute_zeta(basis, hamiltonian.distances_nm,
                                 scenario.bath.r_corr_nm);
  RedfieldOptions redfield_options;
  redfield_options.secular = scenario.options.secular;
  redfield_options.lamb_shift = scenario.options.lamb_shift;
  redfield_options.grouping_tol = scenario.options.grouping_tol;
  RedfieldTensor tensor =
      assemble_tensor(basis, zeta, scenario.bath, redfield_options);
  return Prepared{std::move(scenario), std::move(hamiltonian),
                  std::move(basis), std::move(zeta), std::move(tensor)};
}

int report_error_and_exit_code(const std::filesystem::path& out_path) {
  try {
    throw;
  } catch (const Error& error) {
    std::cerr << "error: " << to_string(error.kind()) << ": " << error.what()
              << "\n";
    return 1;
  } catch (const std::exception& error) {
    std::cerr << "error: internal: " << error.what() << " (no output written"
              << (out_path.empty() ? "" : ": " + out_path.string()) << ")\n";
    return 2;
  }
}

json to_json(const Eigen::VectorXd& v) {
  json array = json::array();
  for (int i = 0; i < v.size(); ++i) array.push_back(v(i));
  return array;
}

json to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

void write_json_mirror(const std::filesystem::path& out_path,
                       const json& document) {
  io::atomic_write(out_path.string() + ".json", document.dump(2) + "\n");
}

}  // namespace

GridSpec parse_grid(const std::string& text) {
  GridSpec grid;
  const size_t first = text.find(':');
  const size_t second = text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos) {
    throw Error(ErrorKind::InvalidArgument,
                "grid spec must be min:max:step, got \"" + text + "\"");
  }
  try {
    grid.min = std::stod(text.substr(0, first));
    grid.max = std::stod(text.substr(first + 1, second - first - 1));
    grid.step = std::stod(text.substr(second + 1));
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument,
                "grid spec must be numeric min:max:step, got \"" + text +
                    "\"");
  }
  if (!(grid.min < grid.max) || !(grid.step > 0.0)) {
    throw Error(ErrorKind::InvalidArgument,
                "grid requires min < max and step > 0");
  }
  return grid;
}

int cmd_simulate(const std::filesystem::path& scenario_path,
                 const std::filesystem::path& out_path,
                 const CommandOverrides& overrides) {
  try {
    Prepared p = prepare(scenario_path, overrides);
    const int n = p.basis.size();

    Liouvillian liouvillian = build_liouvillian(p.basis, p.tensor);
    EvolveOptions evolve_options;
    evolve_options.t_final_ps = p.scenario.options.t_final_ps;
    evolve_options.dt_ps = p.scenario.options.dt_ps > 0.0
                               ? p.scenario.options.dt_ps
                               : default_time_step(p.basis, p.tensor);
    evolve_options.stride = p.scenario.options.stride;
    evolve_options.method = p.scenario.options.method;

    const DensityMatrix rho0 = p.scenario.initial_density(p.basis);
    const Trajectory trajectory =
        evolve(liouvillian, p.basis, rho0, evolve_options);

    io::CsvBuilder csv;
    std::vector<std::string> header{"t_ps"};
    for (int s = 1; s <= n; ++s) {
      header.push_back("pop_site_" + std::to_string(s));
    }
    for (int a = 1; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) {
        header.push_back("re_rho_" + std::to_string(a) + std::to_string(b));
        header.push_back("im_rho_" + std::to_string(a) + std::to_string(b));
      }
    }
    header.push_back("trace");
    header.push_back("min_eig");
    csv.header(header);

    for (int step = 0; step < trajectory.steps(); ++step) {
      csv.begin_row();
      csv.add(trajectory.times_ps[step]);
      for (int s = 0; s < n; ++s) {
        csv.add(trajectory.site_populations[step](s));
      }
      const Eigen::MatrixXcd& rho = trajectory.states[step];
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
          csv.add(rho(a, b).real());
          csv.add(rho(a, b).imag());
        }
      }
      csv.add(trajectory.traces[step]);
      csv.add(trajectory.min_eigenvalues[step]);
      csv.end_row();
    }

    // Thermal baseline and steady-state report sidecar. The Boltzmann state
    // is the secular fixed point; the full-generator kernel is reported
    // alongside so the non-secular gap stays visible rather than asserted.
    const DensityMatrix thermal = thermal_state(p.basis,
                                                p.scenario.bath.temperature_K);
    const Eigen::VectorXd thermal_sites = site_populations(thermal, p.basis.U);
    const SteadyStateReport steady = full_steady_state(liouvillian, p.basis.U);
    json sidecar;
    sidecar["temperature_K"] = p.scenario.bath.temperature_K;
    sidecar["exciton_populations_thermal"] =
        to_json(Eigen::VectorXd(thermal.rho.diagonal().real()));
    sidecar["site_populations_thermal"] = to_json(thermal_sites);
    sidecar["steady_state"] = {
        {"reliable", steady.reliable},
        {"exciton_populations", to_json(steady.exciton_populations)},
        {"site_populations", to_json(steady.site_populations)},
        {"slowest_mode_rad_ps", steady.spectral_gap},
        {"max_site_gap_vs_thermal",
         steady.reliable
             ? (steady.site_populations - thermal_sites).cwiseAbs().maxCoeff()
             : 0.0},
    };

    io::atomic_write(out_path, csv.str());
    io::atomic_write(out_path.string() + ".thermal.json",
                     sidecar.dump(2) + "\n");

    if (overrides.json_mirror) {
      json mirror;
      mirror["columns"] = header;
      json records = json::array();
      for (int step = 0; step < trajectory.steps(); ++step) {
        json record;
        record["t_ps"] = trajectory.times_ps[step];
        record["pop_site"] = to_json(trajectory.site_populations[step]);
        record["trace"] = trajectory.traces[step];
        record["min_eig"] = trajectory.min_eigenvalues[step];
        json coherences = json::array();
        const Eigen::MatrixXcd& rho = trajectory.states[step];
        for (int a = 0; a < n; ++a) {
          for (int b = a + 1; b < n; ++b) {
            coherences.push_back({{"a", a + 1},
                                  {"b", b + 1},
                                  {"re", rho(a, b).real()},
                                  {"im", rho(a, b).imag()}});
          }
        }
        record["coherences"] = coherences;
        records.push_back(record);
      }
      mirror["records"] = records;
      write_json_mirror(out_path, mirror);
    }
    return 0;
  } catch (...) {
    return report_error_and_exit_code(out_path);
  }
}

int cmd_rates(const std::filesystem::path& scenario_path,
              const std::filesystem::path& out_path,
              const CommandOverrides& overrides) {
  try {
    Prepared p = prepare(scenario_path, overrides);
    const RateMatrix rates = compute_rates(p.zeta, p.basis, p.scenario.bath);
    const std::vector<RateTableRow> rows = rate_table(rates);

    io::CsvBuilder csv;
    csv.header({"from", "to", "log10_zeta", "log10_C_s", "log10_k_s",
                "k_ps_inv"});
    for (const RateTableRow& row : rows) {
      csv.begin_row();
      csv.add(row.from_state);
      csv.add(row.to_state);
      csv.add(row.log10_zeta);
      csv.add(row.log10_c_s);
      csv.add(row.log10_k_s);
      csv.add(row.k_ps_inv);
      csv.end_row();
    }
    io::atomic_write(out_path, csv.str());

    if (overrides.json_mirror) {
      json records = json::array();
      for (const RateTableRow& row : rows) {
        records.push_back({{"from", row.from_state},
                           {"to", row.to_state},
                           {"log10_zeta", row.log10_zeta},
                           {"log10_C_s", row.log10_c_s},
                           {"log10_k_s", row.log10_k_s},
                           {"k_ps_inv", row.k_ps_inv}});
      }
      write_json_mirror(out_path, json{{"records", records}});
    }
    return 0;
  } catch (...) {
    return report_error_and_exit_code(out_path);
  }
}

int cmd_spectrum(const std::optional<std::filesystem::path>& scenario_path,
                 const GridSpec& grid, const std::filesystem::path& out_path,
                 const CommandOverrides& overrides) {
  try {
    BathModel bath = BathModel::gaas_10k();
    std::vector<double> transitions;
    std::vector<std::pair<int, int>> transition_pairs;
    if (scenario_path) {
      Scenario scenario = load_scenario(*scenario_path);
      bath = scenario.bath;
      const ExcitonBasis basis =
          diagonalize(build_hamiltonian(scenario.network));
      for (int a = 0; a < basis.size(); ++a) {
        for (int b = 0; b < basis.size(); ++b) {
          if (a == b) continue;
          transitions.push_back(basis.omega(a, b));
          transition_pairs.emplace_back(a + 1, b + 1);
        }
      }
    }
    bath.validate();

    const long long count =
        static_cast<long long>(std::floor((grid.max - grid.min) / grid.step +
                                          1e-9)) + 1;
    io::CsvBuilder csv;
    std::vector<std::string> header{"omega_rad_ps", "J_ps_inv", "C_ps_inv",
                                    "C_s_inv"};
    const bool with_marker = scenario_path.has_value();
    if (with_marker) header.push_back("marker");
    csv.header(header);
    for (long long i = 0; i < count; ++i) {
      const double omega = grid.min + static_cast<double>(i) * grid.step;
      csv.begin_row();
      csv.add(omega);
      csv.add(spectral_density(omega, bath));
      const double c = correlation_c(omega, bath);
      csv.add(c);
      csv.add(c * units::ps_inv_to_s_inv);
      if (with_marker) {
        int marker = 0;
        for (double w : transitions) {
          if (std::abs(w - omega) <= 0.5 * grid.step) {
            marker = 1;
            break;
          }
        }
        csv.add(marker);
      }
      csv.end_row();
    }
    io::atomic_write(out_path, csv.str());

    if (overrides.json_mirror) {
      json mirror;
      mirror["bath"] = {{"eta_ps2", bath.eta_ps2},
                        {"omega_c_rad_ps", bath.omega_c_rad_ps},
                        {"r_corr_nm", bath.r_corr_nm},
                        {"temperature_K", bath.temperature_K}};
      json transition_records = json::array();
      for (size_t i = 0; i < transitions.size(); ++i) {
        transition_records.push_back(
            {{"from", transition_pairs[i].first},
             {"to", transition_pairs[i].second},
             {"omega_rad_ps", transitions[i]},
             {"C_ps_inv", correlation_c(transitions[i], bath)}});
      }
      mirror["transitions"] = transition_records;
      write_json_mirror(out_path, mirror);
    }
    return 0;
  } catch (...) {
    return report_error_and_exit_code(out_path);
  }
}

int cmd_scan(const std::filesystem::path& scenario_path,
             const std::vector<double>& factors, ScanMode mode,
             const std::filesystem::path& out_path,
             const CommandOverrides& overrides) {
  try {
    if (factors.empty()) {
      throw Error(ErrorKind::InvalidArgument,
                  "scan requires at least one factor");
    }
    Prepared p = prepare(scenario_path, overrides);
    const int initial = p.scenario.initial_exciton_state(p.basis);
    const std::vector<ScanResult> results =
        scale_scan(p.scenario.network, p.scenario.bath, initial, factors,
                   mode);

    io::CsvBuilder csv;
    csv.header({"factor", "dominant_from", "dominant_to_state", "target_site",
                "k_dominant_ps_inv", "directedness"});
    for (const ScanResult& result : results) {
      csv.begin_row();
      csv.add(result.factor);
      csv.add(result.from_state + 1);
      // 0 marks "no transfer": every rate out of the source state is zero.
      csv.add(result.target.has_transfer ? result.target.to_state + 1 : 0);
      csv.add(result.target.has_transfer ? result.target.site + 1 : 0);
      csv.add(result.target.rate_ps_inv);
      csv.add(result.directedness);
      csv.end_row();
    }
    io::atomic_write(out_path, csv.str());

    if (overrides.json_mirror) {
      json records = json::array();
      for (const ScanResult& result : results) {
        records.push_back(
            {{"factor", result.factor},
             {"dominant_from", result.from_state + 1},
             {"dominant_to_state",
              result.target.has_transfer ? result.target.to_state + 1 : 0},
             {"target_site",
              result.target.has_transfer ? result.target.site + 1 : 0},
             {"k_dominant_ps_inv", result.target.rate_ps_inv},
             {"directedness", result.directedness},
             {"k_ps_inv", to_json(result.rates.k_ps_inv)}});
      }
      write_json_mirror(out_path, json{{"records", records}});
    }
    return 0;
  } catch (...) {
    return report_error_and_exit_code(out_path);
  }
}

}  // namespace eet
