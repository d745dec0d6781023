#include "eet/scenario.hpp"

#include <json.hpp>

#include <cmath>
#include <set>
#include <string>

#include "eet/output.hpp"

namespace eet {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& path,
                               const std::string& message) {
  throw Error(ErrorKind::SchemaError, path + ": " + message);
}

void reject_unknown_fields(const json& object, const std::string& path,
                           const std::set<std::string>& allowed) {
  for (const auto& item : object.items()) {
    if (!allowed.contains(item.key())) {
      schema_error(path + "." + item.key(), "unknown field");
    }
  }
}

double require_number(const json& value, const std::string& path) {
  if (!value.is_number()) schema_error(path, "expected a number");
  return value.get<double>();
}

double require_finite_number(const json& value, const std::string& path) {
  const double x = require_number(value, path);
  if (!std::isfinite(x)) schema_error(path, "must be finite");
  return x;
}

int require_integer(const json& value, const std::string& path) {
  if (!value.is_number_integer()) schema_error(path, "expected an integer");
  return value.get<int>();
}

bool require_bool(const json& value, const std::string& path) {
  if (!value.is_boolean()) schema_error(path, "expected a boolean");
  return value.get<bool>();
}

Eigen::MatrixXd parse_matrix(const json& value, const std::string& path,
                             int n) {
  if (!value.is_array() || static_cast<int>(value.size()) != n) {
    schema_error(path, "expected an array of " + std::to_string(n) + " rows");
  }
  Eigen::MatrixXd m(n, n);
  for (int r = 0; r < n; ++r) {
    const json& row = value[r];
    const std::string row_path = path + "[" + std::to_string(r) + "]";
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      schema_error(row_path,
                   "expected an array of " + std::to_string(n) + " numbers");
    }
    for (int c = 0; c < n; ++c) {
      m(r, c) = require_finite_number(row[c],
                                      row_path + "[" + std::to_string(c) + "]");
    }
  }
  return m;
}

std::vector<Site> parse_sites(const json& value) {
  if (!value.is_array() || value.empty()) {
    schema_error("sites", "expected a non-empty array");
  }
  std::vector<Site> sites;
  for (size_t i = 0; i < value.size(); ++i) {
    const std::string path = "sites[" + std::to_string(i) + "]";
    const json& entry = value[i];
    if (!entry.is_object()) schema_error(path, "expected an object");
    reject_unknown_fields(entry, path, {"position", "energy"});
    if (!entry.contains("position") || !entry.contains("energy")) {
      schema_error(path, "requires position and energy");
    }
    const json& pos = entry["position"];
    if (!pos.is_array() || pos.size() != 3) {
      schema_error(path + ".position", "expected [x, y, z] in nm");
    }
    Site site;
    for (int k = 0; k < 3; ++k) {
      site.position_nm(k) = require_finite_number(
          pos[k], path + ".position[" + std::to_string(k) + "]");
    }
    site.energy_meV = require_finite_number(entry["energy"], path + ".energy");
    sites.push_back(site);
  }
  return sites;
}

CouplingRule parse_coupling(const json& root, int n_sites) {
  if (!root.contains("coupling")) return DipolePerpendicular{};
  const json& value = root["coupling"];
  if (!value.is_object()) schema_error("coupling", "expected an object");
  if (!value.contains("rule")) schema_error("coupling.rule", "required");
  if (!value["rule"].is_string()) {
    schema_error("coupling.rule", "expected a string");
  }
  const std::string rule = value["rule"].get<std::string>();
  if (rule == "dipole_perpendicular") {
    reject_unknown_fields(value, "coupling", {"rule", "strength"});
    DipolePerpendicular dipole;
    if (value.contains("strength")) {
      dipole.strength_meV_nm3 =
          require_finite_number(value["strength"], "coupling.strength");
      if (dipole.strength_meV_nm3 < 0.0) {
        schema_error("coupling.strength", "must be >= 0");
      }
    }
    return dipole;
  }
  if (rule == "explicit") {
    reject_unknown_fields(value, "coupling", {"rule", "matrix"});
    if (!value.contains("matrix")) schema_error("coupling.matrix", "required");
    return ExplicitCouplings{
        parse_matrix(value["matrix"], "coupling.matrix", n_sites)};
  }
  schema_error("coupling.rule",
               "expected \"dipole_perpendicular\" or \"explicit\"");
}

BathModel parse_bath(const json& root) {
  if (!root.contains("bath")) return BathModel::gaas_10k();
  const json& value = root["bath"];
  if (value.is_string()) {
    const std::string preset = value.get<std::string>();
    if (preset == "GaAs-10K") return BathModel::gaas_10k();
    schema_error("bath", "unknown preset \"" + preset + "\"");
  }
  if (!value.is_object()) {
    schema_error("bath", "expected a preset name or an object");
  }
  reject_unknown_fields(value, "bath",
                        {"eta", "omega_c", "r_corr", "temperature"});
  for (const char* field : {"eta", "omega_c", "r_corr", "temperature"}) {
    if (!value.contains(field)) {
      schema_error(std::string("bath.") + field, "required");
    }
  }
  BathModel bath;
  bath.eta_ps2 = require_finite_number(value["eta"], "bath.eta");
  bath.omega_c_rad_ps = require_finite_number(value["omega_c"], "bath.omega_c");
  bath.r_corr_nm = require_finite_number(value["r_corr"], "bath.r_corr");
  bath.temperature_K =
      require_finite_number(value["temperature"], "bath.temperature");
  if (bath.eta_ps2 < 0.0) schema_error("bath.eta", "must be >= 0");
  if (!(bath.omega_c_rad_ps > 0.0)) schema_error("bath.omega_c", "must be > 0");
  if (!(bath.r_corr_nm > 0.0)) schema_error("bath.r_corr", "must be > 0");
  if (!(bath.temperature_K > 0.0)) {
    schema_error("bath.temperature", "must be > 0");
  }
  return bath;
}

SimulationOptions parse_options(const json& root) {
  SimulationOptions options;
  if (!root.contains("options")) return options;
  const json& value = root["options"];
  if (!value.is_object()) schema_error("options", "expected an object");
  reject_unknown_fields(value, "options",
                        {"secular", "lamb_shift", "method", "dt", "t_final",
                         "stride", "grouping_tol"});
  if (value.contains("secular")) {
    options.secular = require_bool(value["secular"], "options.secular");
  }
  if (value.contains("lamb_shift")) {
    options.lamb_shift =
        require_bool(value["lamb_shift"], "options.lamb_shift");
  }
  if (value.contains("method")) {
    if (!value["method"].is_string()) {
      schema_error("options.method", "expected \"rk4\" or \"expm\"");
    }
    const std::string method = value["method"].get<std::string>();
    if (method == "rk4") {
      options.method = Method::Rk4;
    } else if (method == "expm") {
      options.method = Method::Expm;
    } else {
      schema_error("options.method", "expected \"rk4\" or \"expm\"");
    }
  }
  if (value.contains("dt")) {
    options.dt_ps = require_finite_number(value["dt"], "options.dt");
    if (!(options.dt_ps > 0.0)) schema_error("options.dt", "must be > 0");
  }
  if (value.contains("t_final")) {
    options.t_final_ps =
        require_finite_number(value["t_final"], "options.t_final");
    if (!(options.t_final_ps > 0.0)) {
      schema_error("options.t_final", "must be > 0");
    }
  }
  if (value.contains("stride")) {
    options.stride = require_integer(value["stride"], "options.stride");
    if (options.stride < 1) schema_error("options.stride", "must be >= 1");
  }
  if (value.contains("grouping_tol")) {
    options.grouping_tol =
        require_finite_number(value["grouping_tol"], "options.grouping_tol");
    if (options.grouping_tol < 0.0) {
      schema_error("options.grouping_tol", "must be >= 0");
    }
  }
  return options;
}

InitialState parse_initial(const json& root, int n_sites) {
  InitialState initial;
  if (!root.contains("initial")) {
    initial.kind = InitialState::Kind::SiteIndex;
    initial.index = 0;
    return initial;
  }
  const json& value = root["initial"];
  if (!value.is_object()) schema_error("initial", "expected an object");
  reject_unknown_fields(value, "initial", {"site", "exciton", "matrix"});
  const int selectors = static_cast<int>(value.contains("site")) +
                        static_cast<int>(value.contains("exciton")) +
                        static_cast<int>(value.contains("matrix"));
  if (selectors != 1) {
    schema_error("initial",
                 "exactly one of site, exciton or matrix is required");
  }
  if (value.contains("site") || value.contains("exciton")) {
    const bool is_site = value.contains("site");
    const std::string path = is_site ? "initial.site" : "initial.exciton";
    const int index = require_integer(value[is_site ? "site" : "exciton"],
                                      path);
    if (index < 1 || index > n_sites) {
      schema_error(path, "must lie in 1.." + std::to_string(n_sites));
    }
    initial.kind = is_site ? InitialState::Kind::SiteIndex
                           : InitialState::Kind::ExcitonIndex;
    initial.index = index - 1;
    return initial;
  }

  const json& m = value["matrix"];
  if (!m.is_object()) schema_error("initial.matrix", "expected an object");
  reject_unknown_fields(m, "initial.matrix", {"basis", "re", "im"});
  if (!m.contains("basis") || !m["basis"].is_string()) {
    schema_error("initial.matrix.basis", "expected \"site\" or \"exciton\"");
  }
  const std::string basis_name = m["basis"].get<std::string>();
  Basis basis;
  if (basis_name == "site") {
    basis = Basis::Site;
  } else if (basis_name == "exciton") {
    basis = Basis::Exciton;
  } else {
    schema_error("initial.matrix.basis", "expected \"site\" or \"exciton\"");
  }
  if (!m.contains("re")) schema_error("initial.matrix.re", "required");
  const Eigen::MatrixXd re = parse_matrix(m["re"], "initial.matrix.re",
                                          n_sites);
  Eigen::MatrixXd im = Eigen::MatrixXd::Zero(n_sites, n_sites);
  if (m.contains("im")) {
    im = parse_matrix(m["im"], "initial.matrix.im", n_sites);
  }
  initial.kind = InitialState::Kind::Matrix;
  initial.matrix.basis = basis;
  initial.matrix.rho =
      re.cast<std::complex<double>>() +
      std::complex<double>(0.0, 1.0) * im.cast<std::complex<double>>();
  try {
    validate_density(initial.matrix);
  } catch (const Error& error) {
    throw Error(ErrorKind::PhysicsError,
                std::string("initial.matrix: ") + error.what());
  }
  return initial;
}

}  // namespace

DensityMatrix Scenario::initial_density(const ExcitonBasis& basis) const {
  switch (initial.kind) {
    case InitialState::Kind::SiteIndex: {
      const DensityMatrix site_state =
          DensityMatrix::projector(initial.index, basis.size(), Basis::Site);
      return transform_density(site_state, Basis::Exciton, basis.U);
    }
    case InitialState::Kind::ExcitonIndex:
      return DensityMatrix::projector(initial.index, basis.size(),
                                      Basis::Exciton);
    case InitialState::Kind::Matrix:
      return transform_density(initial.matrix, Basis::Exciton, basis.U);
  }
  throw std::logic_error("unreachable");
}

int Scenario::initial_exciton_state(const ExcitonBasis& basis) const {
  const DensityMatrix rho = initial_density(basis);
  const Eigen::VectorXd populations = rho.rho.diagonal().real();
  int best = 0;
  for (int a = 1; a < populations.size(); ++a) {
    if (populations(a) > populations(best)) best = a;
  }
  return best;
}

Scenario parse_scenario(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& error) {
    throw Error(ErrorKind::SyntaxError, error.what());
  }
  if (!root.is_object()) {
    schema_error("(document)", "expected a JSON object");
  }
  reject_unknown_fields(root, "(document)",
                        {"sites", "coupling", "bath", "options", "initial"});
  if (!root.contains("sites")) schema_error("sites", "required");

  std::vector<Site> sites = parse_sites(root["sites"]);
  const int n = static_cast<int>(sites.size());
  CouplingRule coupling = parse_coupling(root, n);
  BathModel bath = parse_bath(root);
  SimulationOptions options = parse_options(root);
  InitialState initial = parse_initial(root, n);

  try {
    return Scenario{SiteNetwork(std::move(sites), std::move(coupling)), bath,
                    options, initial};
  } catch (const Error& error) {
    // Geometry and matrix-shape problems surface here after the schema has
    // already passed; reclassify them as physics violations.
    throw Error(ErrorKind::PhysicsError, error.what());
  }
}

Scenario load_scenario(const std::filesystem::path& path) {
  return parse_scenario(io::read_file(path));
}

}  // namespace eet
