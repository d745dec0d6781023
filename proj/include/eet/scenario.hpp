#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "eet/bath.hpp"
#include "eet/density.hpp"
#include "eet/propagate.hpp"
#include "eet/system.hpp"

namespace eet {

struct SimulationOptions {
  bool secular = false;
  bool lamb_shift = true;
  Method method = Method::Expm;
  double dt_ps = 0.0;  // 0 = automatic
  double t_final_ps = 1000.0;
  int stride = 1000;
  double grouping_tol = 1e-9;
};

struct InitialState {
  enum class Kind { SiteIndex, ExcitonIndex, Matrix };
  Kind kind = Kind::SiteIndex;
  int index = 0;  // 0-based
  DensityMatrix matrix;
};

/// A fully validated experiment definition: the network, the bath, solver
/// options and the initial state.
struct Scenario {
  SiteNetwork network;
  BathModel bath;
  SimulationOptions options;
  InitialState initial;

  /// Initial density matrix in the exciton basis.
  DensityMatrix initial_density(const ExcitonBasis& basis) const;
  /// Eigenstate the initial excitation mostly lives in (argmax of the
  /// exciton-basis diagonal).
  int initial_exciton_state(const ExcitonBasis& basis) const;
};

/// Parses and validates a scenario document. Strict: unknown fields are
/// rejected with path-qualified messages. Syntax, schema and physics
/// violations raise distinct error kinds.
Scenario parse_scenario(const std::string& json_text);

Scenario load_scenario(const std::filesystem::path& path);

}  // namespace eet
