#include <doctest.h>

#include <cmath>

#include "rwc/run.hpp"

using namespace rwc;

TEST_CASE("config parsing and validation") {
  const RunConfig defaults = parse_config_json("{}");
  CHECK(defaults.alpha == 0.05);
  CHECK(defaults.omega_c == 5.0);
  CHECK(defaults.temperatures == std::vector<double>{0.0});
  CHECK(defaults.steps == 600);
  defaults.validate();

  RunConfig bad = defaults;
  bad.alpha = -0.05;
  CHECK_THROWS_WITH_AS(bad.validate(), "bath.alpha: must be > 0", ConfigError);

  bad = defaults;
  bad.temperatures.clear();
  CHECK_THROWS_WITH_AS(bad.validate(), "bath.temperatures: must not be empty", ConfigError);

  bad = defaults;
  bad.steps = 1;
  CHECK_THROWS_AS(bad.validate(), ConfigError);

  bad = defaults;
  bad.initial_state = "mystery";
  CHECK_THROWS_AS(bad.validate(), ConfigError);

  CHECK_THROWS_AS(parse_config_json("{not json"), ConfigError);
  CHECK_THROWS_AS(parse_config_json("{\"backend\": \"magic\"}"), ConfigError);

  const RunConfig parsed = parse_config_json(R"({
    "bath": {"alpha": 0.1, "omega_c": 4.0, "temperatures": [0.0, 2.0]},
    "grid": {"t_max": 10.0, "steps": 100},
    "backend": "ode",
    "output": {"path": "x.csv", "format": "json"}
  })");
  CHECK(parsed.alpha == 0.1);
  CHECK(parsed.temperatures.size() == 2);
  CHECK(parsed.backend == Backend::Ode);
  CHECK(parsed.format == "json");
}

TEST_CASE("output naming and formatting") {
  CHECK(path_for_temperature("out.csv", 0.0) == "out_T0.csv");
  CHECK(path_for_temperature("data/run.csv", 2.5) == "data/run_T2.5.csv");
  CHECK(path_for_temperature("noext", 1.0) == "noext_T1");

  OutputTable t;
  t.columns = {"a", "b"};
  t.rows = {{1.0, -0.5}, {3.25e-12, 2e8}};
  const std::string csv = render_csv(t);
  CHECK(csv == "a,b\n1.00000000000e+00,-5.00000000000e-01\n"
               "3.25000000000e-12,2.00000000000e+08\n");
  CHECK(render_csv(t) == csv);  // deterministic
  const std::string js = render_json(t);
  CHECK(js.find("\"columns\": [\"a\", \"b\"]") != std::string::npos);
}

TEST_CASE("coefficient and figure tables") {
  RunConfig cfg;
  cfg.t_max = 2.0;
  cfg.steps = 4;

  const OutputTable coeffs = coeffs_table(cfg, 0.0);
  REQUIRE(coeffs.columns.size() == 11);
  REQUIRE(coeffs.rows.size() == 5);
  for (size_t c = 1; c < coeffs.columns.size(); ++c) CHECK(coeffs.rows[0][c] == 0.0);

  const OutputTable fig2 = figure2_table(cfg, 0.0);
  REQUIRE(fig2.rows.size() == 5);
  CHECK(fig2.rows[0][1] == doctest::Approx(1.0).epsilon(1e-10));  // log-negativity
  CHECK(fig2.rows[0][2] == doctest::Approx(1.0).epsilon(1e-10));  // l1 coherence
  CHECK(fig2.rows[0][3] == doctest::Approx(1.0).epsilon(1e-12));  // sigma_y distance
  CHECK(fig2.rows[0][4] == 0.0);                                  // g

  const OutputTable fig1 = figure1_table(cfg, 0.0);
  // Davies population column decays as a pure exponential: log-linear residual
  double gamma = -1.0;
  for (size_t i = 1; i < fig1.rows.size(); ++i) {
    const double t = fig1.rows[i][0], p = fig1.rows[i][2];
    const double slope = -std::log(p) / t;
    if (gamma < 0) gamma = slope;
    CHECK(std::abs(slope - gamma) < 1e-8);
  }
  // determinism across runs
  CHECK(render_csv(figure1_table(cfg, 0.0)) == render_csv(fig1));
}

TEST_CASE("trajectory tables and the lab frame") {
  RunConfig cfg;
  cfg.t_max = 2.0;
  cfg.steps = 4;
  cfg.initial_state = "plus";

  const OutputTable interaction = trajectory_table(cfg, 0.0);
  cfg.lab_frame = true;
  const OutputTable lab = trajectory_table(cfg, 0.0);
  for (size_t i = 0; i < interaction.rows.size(); ++i) {
    // populations are frame independent; |rho_01| too
    CHECK(lab.rows[i][1] == doctest::Approx(interaction.rows[i][1]).epsilon(1e-14));
    const double mag_int =
        std::hypot(interaction.rows[i][2], interaction.rows[i][3]);
    const double mag_lab = std::hypot(lab.rows[i][2], lab.rows[i][3]);
    CHECK(mag_lab == doctest::Approx(mag_int).epsilon(1e-12));
  }
  // but the phases differ at t > 0
  CHECK(std::abs(lab.rows[3][2] - interaction.rows[3][2]) > 1e-3);
}
