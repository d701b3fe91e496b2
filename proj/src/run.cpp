#include "rwc/run.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "rwc/acceptance.hpp"
#include "rwc/witness.hpp"

namespace rwc {

namespace {

std::string format_cell(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.11e", v);
  return buf;
}

CoefficientEngine make_engine(const RunConfig& cfg, double temperature) {
  return CoefficientEngine(OhmicBath(cfg.alpha, cfg.omega_c, temperature), 1.0, cfg.tolerances);
}

}  // namespace

std::string render_csv(const OutputTable& table) {
  std::ostringstream os;
  for (size_t c = 0; c < table.columns.size(); ++c)
    os << table.columns[c] << (c + 1 < table.columns.size() ? "," : "");
  os << "\n";
  for (const auto& row : table.rows) {
    for (size_t c = 0; c < row.size(); ++c)
      os << format_cell(row[c]) << (c + 1 < row.size() ? "," : "");
    os << "\n";
  }
  return os.str();
}

std::string render_json(const OutputTable& table) {
  std::ostringstream os;
  os << "{\n  \"columns\": [";
  for (size_t c = 0; c < table.columns.size(); ++c)
    os << "\"" << table.columns[c] << "\"" << (c + 1 < table.columns.size() ? ", " : "");
  os << "],\n  \"rows\": [\n";
  for (size_t r = 0; r < table.rows.size(); ++r) {
    os << "    [";
    for (size_t c = 0; c < table.rows[r].size(); ++c)
      os << format_cell(table.rows[r][c]) << (c + 1 < table.rows[r].size() ? ", " : "");
    os << (r + 1 < table.rows.size() ? "],\n" : "]\n");
  }
  os << "  ]\n}\n";
  return os.str();
}

std::string path_for_temperature(const std::string& base, double temperature) {
  char tbuf[32];
  std::snprintf(tbuf, sizeof(tbuf), "%g", temperature);
  const auto dot = base.find_last_of('.');
  const auto slash = base.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return base + "_T" + tbuf;
  return base.substr(0, dot) + "_T" + tbuf + base.substr(dot);
}

OutputTable coeffs_table(const RunConfig& cfg, double temperature) {
  const CoefficientEngine engine = make_engine(cfg, temperature);
  OutputTable t;
  t.columns = {"t",        "Gamma_pp", "Gamma_mm", "Re_Gamma_pm", "Im_Gamma_pm", "Xi",
               "gamma_pp", "gamma_mm", "Re_gamma_pm", "Im_gamma_pm", "Delta"};
  for (double time : cfg.grid()) {
    const SBCoefficients c = engine.coefficients(time);
    const CoefficientDerivatives d = engine.derivatives(time);
    const LiouvillianCoefficients lc = liouvillian_coefficients(c, d);
    t.rows.push_back({time, c.gamma_pp, c.gamma_mm, c.gamma_pm.real(), c.gamma_pm.imag(), c.xi,
                      lc.gamma_pp, lc.gamma_mm, lc.gamma_pm.real(), lc.gamma_pm.imag(),
                      lc.delta});
  }
  return t;
}

OutputTable trajectory_table(const RunConfig& cfg, double temperature) {
  const CoefficientEngine engine = make_engine(cfg, temperature);
  OutputTable t;
  t.columns = {"t", "rho_00", "Re_rho_01", "Im_rho_01", "rho_11"};
  const auto grid = cfg.grid();
  const auto states = evolve(engine, cfg.make_initial_state(), grid, cfg.backend, cfg.ode);
  for (size_t i = 0; i < grid.size(); ++i) {
    Matrix rho = states[i].matrix();
    if (cfg.lab_frame) {
      // re-dress with e^{-i H_S t}: the coherence picks up the free phase
      const Complex phase = std::polar(1.0, engine.omega0() * grid[i]);
      rho(0, 1) *= phase;
      rho(1, 0) = std::conj(rho(0, 1));
    }
    t.rows.push_back({grid[i], rho(0, 0).real(), rho(0, 1).real(), rho(0, 1).imag(),
                      rho(1, 1).real()});
  }
  return t;
}

OutputTable figure1_table(const RunConfig& cfg, double temperature) {
  const CoefficientEngine engine = make_engine(cfg, temperature);
  OutputTable t;
  t.columns = {"t", "population_rwc", "population_davies", "coherence_rwc",
               "coherence_davies", "Delta_t", "Delta_davies"};
  const auto grid = cfg.grid();
  const auto series = witness_series(engine, grid, cfg.threads);
  const DaviesRates dr = davies_rates(engine);
  for (const auto& r : series)
    t.rows.push_back({r.t, r.population_excited, r.population_davies, r.coherence_abs,
                      r.coherence_davies, r.delta, dr.lamb_shift});
  return t;
}

OutputTable figure2_table(const RunConfig& cfg, double temperature) {
  const CoefficientEngine engine = make_engine(cfg, temperature);
  OutputTable t;
  t.columns = {"t",  "log_negativity", "l1_coherence", "trace_distance_sy",
               "g",  "lambda_plus",    "lambda_minus"};
  const auto series = witness_series(engine, cfg.grid(), cfg.threads);
  for (const auto& r : series)
    t.rows.push_back({r.t, r.log_negativity, r.l1_coherence, r.trace_distance_sy, r.g,
                      r.lambda_plus, r.lambda_minus});
  return t;
}

std::vector<std::string> run_command(const std::string& command, const RunConfig& cfg) {
  cfg.validate();
  std::vector<std::string> written;
  for (double T : cfg.temperatures) {
    OutputTable table;
    if (command == "coeffs") table = coeffs_table(cfg, T);
    else if (command == "trajectory") table = trajectory_table(cfg, T);
    else if (command == "figure1") table = figure1_table(cfg, T);
    else if (command == "figure2") table = figure2_table(cfg, T);
    else throw std::invalid_argument("run_command: unknown command " + command);
    const std::string path = path_for_temperature(cfg.out_path, T);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << (cfg.format == "csv" ? render_csv(table) : render_json(table));
    written.push_back(path);
  }
  return written;
}

int run_validate(std::ostream& os, unsigned threads) {
  int failures = 0;
  for (const CheckResult& r : run_acceptance_checks(threads)) {
    os << format_check_line(r) << "\n";
    if (!r.pass) ++failures;
  }
  return failures;
}

}  // namespace rwc
