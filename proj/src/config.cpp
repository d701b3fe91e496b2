#include "rwc/config.hpp"

#include <fstream>

#include <json.hpp>

namespace rwc {

using nlohmann::json;

std::vector<double> RunConfig::grid(bool include_zero) const {
  if (!times.empty()) {
    std::vector<double> g = times;
    if (!include_zero && !g.empty() && g.front() == 0.0) g.erase(g.begin());
    return g;
  }
  std::vector<double> g;
  if (include_zero) g.push_back(0.0);
  for (int i = 1; i <= steps; ++i) g.push_back(t_max * i / steps);
  return g;
}

QubitState RunConfig::make_initial_state() const {
  if (initial_state == "excited") return QubitState::excited();
  if (initial_state == "ground") return QubitState::ground();
  if (initial_state == "plus") return QubitState::plus();
  if (initial_state == "sigma_y_plus") return QubitState::sigma_y_eigenstate(+1);
  if (initial_state == "sigma_y_minus") return QubitState::sigma_y_eigenstate(-1);
  throw ConfigError("initial_state: unknown selector '" + initial_state + "'");
}

void RunConfig::validate() const {
  if (schema_version != 1) throw ConfigError("schema_version: expected 1");
  if (!(alpha > 0)) throw ConfigError("bath.alpha: must be > 0");
  if (!(omega_c > 0)) throw ConfigError("bath.omega_c: must be > 0");
  if (temperatures.empty()) throw ConfigError("bath.temperatures: must not be empty");
  for (double T : temperatures)
    if (!(T >= 0)) throw ConfigError("bath.temperatures: entries must be >= 0");
  if (times.empty()) {
    if (!(t_max > 0)) throw ConfigError("grid.t_max: must be > 0");
    if (steps < 2) throw ConfigError("grid.steps: must be >= 2");
  } else {
    for (size_t i = 0; i + 1 < times.size(); ++i)
      if (!(times[i] < times[i + 1]))
        throw ConfigError("grid.times: must be strictly increasing");
    if (times.front() < 0) throw ConfigError("grid.times: must start at t >= 0");
  }
  if (!(tolerances.quad_abs > 0) || !(tolerances.quad_rel > 0) ||
      !(tolerances.table_interp > 0))
    throw ConfigError("tolerances: must be > 0");
  if (!(ode.abs_tol > 0) || !(ode.rel_tol > 0)) throw ConfigError("tolerances.ode: must be > 0");
  if (format != "csv" && format != "json") throw ConfigError("output.format: must be csv or json");
  make_initial_state();  // validates the selector
}

RunConfig parse_config_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  RunConfig c;
  try {
    c.schema_version = j.value("schema_version", 1);
    if (j.contains("bath")) {
      const auto& b = j["bath"];
      c.alpha = b.value("alpha", c.alpha);
      c.omega_c = b.value("omega_c", c.omega_c);
      if (b.contains("temperatures")) c.temperatures = b["temperatures"].get<std::vector<double>>();
    }
    if (j.contains("grid")) {
      const auto& g = j["grid"];
      c.t_max = g.value("t_max", c.t_max);
      c.steps = g.value("steps", c.steps);
      if (g.contains("times")) c.times = g["times"].get<std::vector<double>>();
    }
    c.initial_state = j.value("initial_state", c.initial_state);
    if (j.contains("backend")) {
      const std::string b = j["backend"].get<std::string>();
      if (b == "map") c.backend = Backend::Map;
      else if (b == "ode") c.backend = Backend::Ode;
      else throw ConfigError("backend: must be map or ode");
    }
    c.lab_frame = j.value("lab_frame", false);
    if (j.contains("tolerances")) {
      const auto& t = j["tolerances"];
      c.tolerances.quad_abs = t.value("quad_abs", c.tolerances.quad_abs);
      c.tolerances.quad_rel = t.value("quad_rel", c.tolerances.quad_rel);
      c.tolerances.table_interp = t.value("table_interp", c.tolerances.table_interp);
      c.ode.abs_tol = t.value("ode_abs", c.ode.abs_tol);
      c.ode.rel_tol = t.value("ode_rel", c.ode.rel_tol);
    }
    if (j.contains("output")) {
      const auto& o = j["output"];
      c.out_path = o.value("path", c.out_path);
      c.format = o.value("format", c.format);
    }
    c.threads = j.value("threads", 0u);
  } catch (const ConfigError&) {
    throw;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_config_json(text);
}

}  // namespace rwc
