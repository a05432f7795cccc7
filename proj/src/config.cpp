#include "sqgfront/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace sqgfront {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

double to_double(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': expected a number, got '" + v + "'");
  }
}

long to_long(const std::string& key, const std::string& v) {
  try {
    size_t pos = 0;
    long d = std::stol(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': expected an integer, got '" + v + "'");
  }
}

}  // namespace

std::string SimConfig::validate() const {
  if (n < 8 || n % 2 != 0) throw ConfigError("config key 'n': must be even and >= 8");
  if (!(t_end > 0.0)) throw ConfigError("config key 't_end': must be > 0");
  if (dt < 0.0) throw ConfigError("config key 'dt': must be >= 0 (0 = auto)");
  if (!(cfl > 0.0)) throw ConfigError("config key 'cfl': must be > 0");
  if (!(s > 0.0)) throw ConfigError("config key 's': must be > 0");
  if (record_interval < 1) throw ConfigError("config key 'record_interval': must be >= 1");
  if (snapshot_interval < 0) throw ConfigError("config key 'snapshot_interval': must be >= 0");
  if (filter_level < 0.0) throw ConfigError("config key 'filter_level': must be >= 0");
  if (threads < 0) throw ConfigError("config key 'threads': must be >= 0");
  if (max_steps < 0) throw ConfigError("config key 'max_steps': must be >= 0");
  if (s >= 0.5) {
    return "warning: s = " + std::to_string(s) +
           " lies outside the theory range (0, 0.5); proceeding anyway";
  }
  return "";
}

void apply_key_value(SimConfig& cfg, const std::string& raw_key, const std::string& raw_value) {
  std::string key = trim(raw_key);
  std::string value = trim(raw_value);
  if (key == "scenario") cfg.scenario = value;
  else if (key == "n") cfg.n = static_cast<int>(to_long(key, value));
  else if (key == "dt") cfg.dt = to_double(key, value);
  else if (key == "cfl") cfg.cfl = to_double(key, value);
  else if (key == "t_end") cfg.t_end = to_double(key, value);
  else if (key == "s") cfg.s = to_double(key, value);
  else if (key == "filter_level") cfg.filter_level = to_double(key, value);
  else if (key == "reparam_trigger") cfg.reparam_trigger = to_double(key, value);
  else if (key == "f_max_threshold") cfg.f_max_threshold = to_double(key, value);
  else if (key == "record_interval") cfg.record_interval = static_cast<int>(to_long(key, value));
  else if (key == "snapshot_interval") cfg.snapshot_interval = static_cast<int>(to_long(key, value));
  else if (key == "max_steps") cfg.max_steps = to_long(key, value);
  else if (key == "output_dir") cfg.output_dir = value;
  else if (key == "seed") cfg.seed = static_cast<unsigned long>(to_long(key, value));
  else if (key == "threads") cfg.threads = static_cast<int>(to_long(key, value));
  else if (key == "radius") cfg.params.radius = to_double(key, value);
  else if (key == "a") cfg.params.a = to_double(key, value);
  else if (key == "b") cfg.params.b = to_double(key, value);
  else if (key == "amplitude") cfg.params.amplitude = to_double(key, value);
  else if (key == "mode") cfg.params.mode = static_cast<int>(to_long(key, value));
  else if (key == "gap") cfg.params.gap = to_double(key, value);
  else if (key == "rough_c") cfg.params.rough_c = to_double(key, value);
  else throw ConfigError("unknown config key '" + key + "'");
}

SimConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  SimConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config file " + path + ":" + std::to_string(lineno) +
                        ": expected 'key = value'");
    }
    apply_key_value(cfg, line.substr(0, eq), line.substr(eq + 1));
  }
  return cfg;
}

}  // namespace sqgfront
