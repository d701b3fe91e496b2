// config.hpp — Run configuration: a single versioned JSON document; CLI flags
// override individual keys.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rwc/coefficients.hpp"
#include "rwc/evolve.hpp"

namespace rwc {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int schema_version = 1;
  double alpha = 0.05;
  double omega_c = 5.0;
  std::vector<double> temperatures = {0.0};

  double t_max = 30.0;
  int steps = 600;
  std::vector<double> times;  // explicit grid; overrides t_max/steps when set

  std::string initial_state = "excited";  // excited | ground | plus | sigma_y_plus | sigma_y_minus
  Backend backend = Backend::Map;
  bool lab_frame = false;

  Tolerances tolerances;
  OdeOptions ode;

  std::string out_path = "out.csv";
  std::string format = "csv";  // csv | json
  unsigned threads = 0;

  std::vector<double> grid(bool include_zero = true) const;
  QubitState make_initial_state() const;
  void validate() const;  // throws ConfigError naming the offending field
};

RunConfig load_config(const std::string& path);
RunConfig parse_config_json(const std::string& text);

}  // namespace rwc
