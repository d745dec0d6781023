#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "eet/analysis.hpp"
#include "eet/propagate.hpp"

namespace eet {

/// CLI flag overrides applied on top of the scenario's options block.
struct CommandOverrides {
  std::optional<bool> secular;
  std::optional<bool> lamb_shift;
  std::optional<Method> method;
  bool json_mirror = false;  // additionally write <out>.json
};

struct GridSpec {
  double min = -5.0;
  double max = 5.0;
  double step = 0.01;
};

/// Parses "min:max:step"; throws InvalidArgument on malformed specs.
GridSpec parse_grid(const std::string& text);

/// Trajectory CSV (site populations, exciton coherences, trace, min
/// eigenvalue) plus a <out>.thermal.json sidecar with the thermal baseline
/// and the steady-state report. Returns a process exit code.
int cmd_simulate(const std::filesystem::path& scenario_path,
                 const std::filesystem::path& out_path,
                 const CommandOverrides& overrides = {});

/// Factored rate table CSV (log zeta, log C, log k in s^-1, raw k in
/// ps^-1), one row per ordered eigenstate pair.
int cmd_rates(const std::filesystem::path& scenario_path,
              const std::filesystem::path& out_path,
              const CommandOverrides& overrides = {});

/// J(w) and C(w) on a frequency grid. When a scenario is supplied its bath
/// is used and rows containing a transition frequency are marked.
int cmd_spectrum(const std::optional<std::filesystem::path>& scenario_path,
                 const GridSpec& grid, const std::filesystem::path& out_path,
                 const CommandOverrides& overrides = {});

/// Dominant-transfer summary for each Hamiltonian scale factor.
int cmd_scan(const std::filesystem::path& scenario_path,
             const std::vector<double>& factors, ScanMode mode,
             const std::filesystem::path& out_path,
             const CommandOverrides& overrides = {});

}  // namespace eet
