#include <doctest.h>

#include <cmath>

#include "rwc/witness.hpp"

using namespace rwc;

namespace {

const CoefficientEngine& engine_T0() {
  static CoefficientEngine e(OhmicBath(0.05, 5.0, 0.0));
  return e;
}

LiouvillianCoefficients rates_only(double gpp, double gmm, Complex gpm) {
  LiouvillianCoefficients lc;
  lc.gamma_pp = gpp;
  lc.gamma_mm = gmm;
  lc.gamma_pm = gpm;
  return lc;
}

}  // namespace

TEST_CASE("canonical rates") {
  const CanonicalRates diag = canonical_rates(rates_only(0.7, 0.2, Complex(0)));
  CHECK(diag.lambda_plus == doctest::Approx(0.7));
  CHECK(diag.lambda_minus == doctest::Approx(0.2));

  const CanonicalRates sym = canonical_rates(rates_only(0.4, 0.4, Complex(0.0, 0.15)));
  CHECK(sym.lambda_plus == doctest::Approx(0.55).epsilon(1e-14));
  CHECK(sym.lambda_minus == doctest::Approx(0.25).epsilon(1e-14));

  // compare with a generic Hermitian eigensolve of the channel matrix
  const LiouvillianCoefficients lc = rates_only(0.31, 0.18, Complex(0.07, -0.11));
  Matrix cm(2, 2);
  cm << lc.gamma_pp, lc.gamma_pm, std::conj(lc.gamma_pm), lc.gamma_mm;
  const auto ev = hermitian_eigenvalues(cm);
  const CanonicalRates r = canonical_rates(lc);
  CHECK(r.lambda_minus == doctest::Approx(ev(0)).epsilon(1e-12));
  CHECK(r.lambda_plus == doctest::Approx(ev(1)).epsilon(1e-12));
  CHECK(r.lambda_plus + r.lambda_minus ==
        doctest::Approx(lc.gamma_pp + lc.gamma_mm).epsilon(1e-12));
}

TEST_CASE("g function") {
  CHECK(g_function({1.0, 0.3}) == 0.0);
  CHECK(g_function({1.0, -0.2}) == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(g_function({-0.1, -0.2}) == doctest::Approx(0.3).epsilon(1e-14));

  // finite-eps Choi-derivative evaluation agrees with the rate formula
  for (double t : {1.1, 4.3, 9.7}) {
    const LiouvillianCoefficients lc = engine_T0().liouvillian_coefficients(t);
    const double g_rates = g_function(canonical_rates(lc));
    const double g_choi = g_function_choi(liouvillian_superop(lc));
    CHECK(std::abs(g_rates - g_choi) < 1e-4);
  }
}

TEST_CASE("trace distance") {
  CHECK(trace_distance(QubitState::plus(), QubitState::plus()) == 0.0);
  CHECK(trace_distance(QubitState::ground(), QubitState::excited()) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(trace_distance(QubitState::sigma_y_eigenstate(+1), QubitState::sigma_y_eigenstate(-1)) ==
        doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("ancilla state") {
  const TwoQubitState id_ext = ancilla_state(Matrix::Identity(4, 4));
  CHECK((id_ext.matrix() - TwoQubitState::max_entangled().matrix()).norm() < 1e-12);

  // fully depolarizing channel: rho -> tr(rho) I/2; Choi state is I/4
  Matrix depol = Matrix::Zero(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      depol += 0.5 * vectorize(ops::identity(2)) *
               vectorize(ops::basis_matrix(2, i, j)).adjoint() *
               (i == j ? 1.0 : 0.0);
  const TwoQubitState dep_ext = ancilla_state(depol);
  CHECK((dep_ext.matrix() - 0.25 * Matrix::Identity(4, 4)).norm() < 1e-12);

  // full amplitude damping: rho -> |0><0| tr(rho); extension is |0><0| x I/2
  Matrix damp = Matrix::Zero(4, 4);
  for (int i = 0; i < 2; ++i)
    damp += vectorize(ops::basis_matrix(2, 0, 0)) *
            vectorize(ops::basis_matrix(2, i, i)).adjoint();
  const TwoQubitState damp_ext = ancilla_state(damp);
  const Matrix expected = kron(ops::basis_matrix(2, 0, 0), 0.5 * ops::identity(2));
  CHECK((damp_ext.matrix() - expected).norm() < 1e-12);

  // transpose map is not CP
  Matrix transpose_map = Matrix::Zero(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      transpose_map +=
          kron(ops::basis_matrix(2, i, j).transpose(), ops::basis_matrix(2, i, j));
  CHECK_THROWS_AS(ancilla_state(transpose_map), std::invalid_argument);
}

TEST_CASE("log negativity") {
  CHECK(log_negativity(TwoQubitState::max_entangled()) == doctest::Approx(1.0).epsilon(1e-12));
  const Matrix product = kron(QubitState::plus().matrix(), QubitState::ground().matrix());
  CHECK(log_negativity(TwoQubitState(product)) == doctest::Approx(0.0).epsilon(1e-12));
  // Werner state at the separability threshold p = 1/3
  const Matrix werner = TwoQubitState::max_entangled().matrix() / 3.0 +
                        (2.0 / 3.0) * 0.25 * Matrix::Identity(4, 4);
  CHECK(log_negativity(TwoQubitState(werner)) == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("l1 coherence") {
  CHECK(l1_coherence(QubitState::excited().matrix()) == 0.0);
  CHECK(l1_coherence(QubitState::plus().matrix()) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(l1_coherence(TwoQubitState::max_entangled().matrix()) ==
        doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("witness series") {
  CHECK_THROWS_AS(witness_series(engine_T0(), {1.0, 1.0}), std::invalid_argument);

  std::vector<double> grid{0.0, 0.5, 1.0, 2.0};
  const auto series = witness_series(engine_T0(), grid, 1);
  CHECK(series.size() == grid.size());
  CHECK(series[0].log_negativity == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(series[0].l1_coherence == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(series[0].trace_distance_sy == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(series[0].g == 0.0);
  CHECK(series[0].population_excited == doctest::Approx(1.0).epsilon(1e-12));

  // Davies reference columns: static semigroup, so g vanishes identically and
  // the populations decay as a pure exponential
  const DaviesRates dr = davies_rates(engine_T0());
  LiouvillianCoefficients lc;
  lc.gamma_pp = dr.pump;
  lc.gamma_mm = dr.decay;
  CHECK(g_function(canonical_rates(lc)) == 0.0);
  for (const auto& r : series) {
    CHECK(r.g_davies == 0.0);
    CHECK(r.population_davies == doctest::Approx(std::exp(-dr.decay * r.t)).epsilon(1e-12));
  }

  // threaded and sequential evaluation agree exactly
  const auto par = witness_series(engine_T0(), grid, 4);
  for (size_t i = 0; i < grid.size(); ++i) {
    CHECK(par[i].g == series[i].g);
    CHECK(par[i].log_negativity == series[i].log_negativity);
  }
  for (const auto& r : series) CHECK(r.g >= 0.0);
}

TEST_CASE("sigma_y trace distance decays non-monotonically") {
  const Vector v_sy = vectorize(ops::sigma_y());
  std::vector<double> td;
  for (double t = 4.1; t <= 4.85; t += 0.1)
    td.push_back(0.5 * trace_norm(devectorize(dynamical_map(engine_T0(), t) * v_sy)));
  double max_rise = 0.0;
  for (size_t i = 0; i + 1 < td.size(); ++i) max_rise = std::max(max_rise, td[i + 1] - td[i]);
  CHECK(max_rise > 1e-4);
}
