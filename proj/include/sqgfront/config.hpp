#pragma once

#include <map>
#include <string>

#include "sqgfront/types.hpp"

namespace sqgfront {

/// Scenario generator parameters; which ones apply depends on the scenario.
struct ScenarioParams {
  double radius = 1.0;      // circle
  double a = 1.2, b = 0.8;  // ellipse semi-axes
  double amplitude = 0.05;  // perturbed_circle radial amplitude
  int mode = 3;             // perturbed_circle radial mode
  double gap = 0.05;        // filament_probe neck gap
  double rough_c = 1.0;     // rough_h2s amplitude constant
};

/// Full simulation configuration; parsed from flat `key = value` files
/// and/or CLI flags (flags win).
struct SimConfig {
  std::string scenario = "circle";
  ScenarioParams params;
  int n = 256;
  double dt = 0.0;  // 0 = auto CFL: dt = cfl * (2pi/n)/max|rhs(t=0)|
  double cfl = 0.5;
  double t_end = 0.5;
  double s = 0.25;                // Sobolev exponent in H^{2+s}
  double filter_level = 1e-12;    // Krasny threshold, 0 = off
  double reparam_trigger = 1e-3;  // speed-variation threshold, <=0 = off
  double f_max_threshold = 1e4;   // arc-chord blow-up stop
  int record_interval = 10;
  int snapshot_interval = 0;  // 0 = final snapshot only
  long max_steps = 0;         // 0 = unlimited
  std::string output_dir = ".";
  unsigned long seed = 7;
  int threads = 1;  // 0 = hardware concurrency

  /// Throws ConfigError naming the offending key. Returns a warning string
  /// (possibly empty), e.g. for s outside (0, 1/2).
  std::string validate() const;
};

/// Parses `key = value` lines ('#' starts a comment). Unknown keys throw.
SimConfig parse_config_file(const std::string& path);
void apply_key_value(SimConfig& cfg, const std::string& key, const std::string& value);

}  // namespace sqgfront
