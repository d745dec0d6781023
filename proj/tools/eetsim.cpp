#include <CLI11.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "eet/commands.hpp"
#include "eet/errors.hpp"

namespace {

struct CommonFlags {
  bool secular = false;
  bool no_lamb_shift = false;
  std::string method;
  bool json_mirror = false;

  eet::CommandOverrides overrides() const {
    eet::CommandOverrides o;
    if (secular) o.secular = true;
    if (no_lamb_shift) o.lamb_shift = false;
    if (method == "rk4") o.method = eet::Method::Rk4;
    if (method == "expm") o.method = eet::Method::Expm;
    o.json_mirror = json_mirror;
    return o;
  }
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_flag("--secular", flags.secular,
                "apply the secular filter to the Redfield tensor");
  cmd->add_flag("--no-lamb-shift", flags.no_lamb_shift,
                "drop the principal-value (Lamb shift) part of Gamma");
  cmd->add_option("--method", flags.method, "integrator: rk4 or expm")
      ->check(CLI::IsMember({"rk4", "expm"}));
  cmd->add_flag("--json", flags.json_mirror,
                "also write the result as <out>.json");
}

std::vector<double> parse_factors(const std::string& text) {
  std::vector<double> factors;
  size_t start = 0;
  while (start <= text.size()) {
    const size_t comma = text.find(',', start);
    const std::string token =
        text.substr(start, comma == std::string::npos ? std::string::npos
                                                      : comma - start);
    if (token.empty()) {
      throw eet::Error(eet::ErrorKind::InvalidArgument,
                       "empty entry in factor list \"" + text + "\"");
    }
    try {
      size_t used = 0;
      factors.push_back(std::stod(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw eet::Error(eet::ErrorKind::InvalidArgument,
                       "bad factor \"" + token + "\"");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return factors;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "eetsim - Redfield simulator for engineered excitonic energy transfer "
      "in site networks coupled to a phonon bath"};
  app.require_subcommand(1);

  std::string scenario;
  std::string out;
  std::string grid = "-5:5:0.01";
  std::string factors = "1";
  std::string scan_mode = "energy";

  CommonFlags sim_flags, rates_flags, spectrum_flags, scan_flags;

  CLI::App* simulate = app.add_subcommand(
      "simulate", "propagate the density matrix and write a trajectory CSV");
  simulate->add_option("--scenario", scenario, "scenario JSON path")
      ->required();
  simulate->add_option("--out", out, "output CSV path")->required();
  add_common_flags(simulate, sim_flags);

  CLI::App* rates = app.add_subcommand(
      "rates", "write the factored population-transfer rate table");
  rates->add_option("--scenario", scenario, "scenario JSON path")->required();
  rates->add_option("--out", out, "output CSV path")->required();
  add_common_flags(rates, rates_flags);

  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "tabulate J(w) and C(w) on a frequency grid");
  spectrum->add_option("--scenario", scenario,
                       "optional scenario (bath + transition markers)");
  spectrum->add_option("--grid", grid, "frequency grid min:max:step");
  spectrum->add_option("--out", out, "output CSV path")->required();
  add_common_flags(spectrum, spectrum_flags);

  CLI::App* scan = app.add_subcommand(
      "scan", "dominant transfer target per Hamiltonian scale factor");
  scan->add_option("--scenario", scenario, "scenario JSON path")->required();
  scan->add_option("--factors", factors, "comma-separated scale factors");
  scan->add_option("--mode", scan_mode,
                   "energy (rescale eigenvalues) or geometry (rescale "
                   "energies and distances)")
      ->check(CLI::IsMember({"energy", "geometry"}));
  scan->add_option("--out", out, "output CSV path")->required();
  add_common_flags(scan, scan_flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed()) {
      return eet::cmd_simulate(scenario, out, sim_flags.overrides());
    }
    if (rates->parsed()) {
      return eet::cmd_rates(scenario, out, rates_flags.overrides());
    }
    if (spectrum->parsed()) {
      std::optional<std::filesystem::path> scenario_path;
      if (!scenario.empty()) scenario_path = scenario;
      return eet::cmd_spectrum(scenario_path, eet::parse_grid(grid), out,
                               spectrum_flags.overrides());
    }
    if (scan->parsed()) {
      return eet::cmd_scan(scenario, parse_factors(factors),
                           scan_mode == "geometry" ? eet::ScanMode::Geometry
                                                   : eet::ScanMode::EnergyOnly,
                           out, scan_flags.overrides());
    }
  } catch (const eet::Error& error) {
    std::cerr << "error: " << to_string(error.kind()) << ": " << error.what()
              << "\n";
    return 1;
  }
  return 1;
}
