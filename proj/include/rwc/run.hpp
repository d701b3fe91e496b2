// run.hpp — Command implementations behind the CLI: coefficient sweeps,
// trajectories, figure data emission, and the validation report.

#pragma once

#include <iosfwd>

#include "rwc/config.hpp"

namespace rwc {

// Table with fixed columns; cells rendered in scientific notation with
// 12 significant digits so reruns are byte-identical.
struct OutputTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

std::string render_csv(const OutputTable& table);
std::string render_json(const OutputTable& table);

// Output path for one temperature: stem_T<temp>.ext
std::string path_for_temperature(const std::string& base, double temperature);

OutputTable coeffs_table(const RunConfig& cfg, double temperature);
OutputTable trajectory_table(const RunConfig& cfg, double temperature);
OutputTable figure1_table(const RunConfig& cfg, double temperature);
OutputTable figure2_table(const RunConfig& cfg, double temperature);

// Writes one file per temperature; returns the paths written.
std::vector<std::string> run_command(const std::string& command, const RunConfig& cfg);

// Runs the acceptance checks, streaming one line per check; returns the number
// of failed checks.
int run_validate(std::ostream& os, unsigned threads);

}  // namespace rwc
