#pragma once

#include <string>
#include <vector>

#include "cmflow/scenarios.hpp"

namespace cmflow {

/// Parse or validation failure, carrying the offending line when known.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg
                                    : msg),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_ = 0;
};

/// Fully resolved run description. parse_config applies preset values for
/// known scenario names first, then explicit keys on top, so a parsed config
/// never contains implicit state and emit_config round-trips exactly.
struct RunConfig {
  // [scenario]
  std::string name;  // registry name, or empty for a fully inline spec
  int n = 2;
  int k = 1;
  double p = 3.0;
  std::string phi_kind = "constant";  // constant|sin2_power|tilted|counterexample
  double phi_eps = 0.2;
  double phi_m = 1.0;
  double phi_delta = 0.3;
  std::string initial_kind = "sphere";  // sphere|spheroid|counterexample
  double initial_radius = 1.0;
  double initial_a = 1.0;
  double initial_c = 1.0;
  std::string expected = "none";  // converge|breakdown|none

  // [grid]
  int num_points = 256;

  // [engine]
  double cfl = 0.2;
  double t_max = 50.0;
  double residual_tol = 1e-6;
  std::string normalization = "normalized_pde";
  bool projection = true;
  int sample_stride = 100;
  double breakdown_zeta_tol = -1e-8;

  // [output]
  std::string directory = "out";
  std::vector<std::string> formats = {"csv", "json"};

  bool operator==(const RunConfig&) const = default;
};

/// Preset for a registry scenario name (engine/grid defaults included).
RunConfig preset_config(const std::string& name);

/// Parses the sectioned key = value grammar. Unknown keys and sections are
/// rejected with the line number; semantic violations (k out of range,
/// incompatible phi/initial choices, bad ranges) are rejected with a message
/// naming the precondition.
RunConfig parse_config(const std::string& text);
RunConfig parse_config_file(const std::string& path);

/// Canonical text form with every field explicit. parse_config(emit_config(c))
/// reproduces c exactly.
std::string emit_config(const RunConfig& cfg);

/// Constructs the grid, profiles and FlowParams described by the config.
ScenarioSpec build_scenario(const RunConfig& cfg);

} // namespace cmflow
