#include "rwc/witness.hpp"

#include <cmath>
#include <thread>

namespace rwc {

CanonicalRates canonical_rates(const LiouvillianCoefficients& lc) {
  const double half = 0.5 * (lc.gamma_pp - lc.gamma_mm);
  const double disc = std::sqrt(half * half + std::norm(lc.gamma_pm));
  const double mean = 0.5 * (lc.gamma_pp + lc.gamma_mm);
  return {mean + disc, mean - disc};
}

double g_function(const CanonicalRates& r) {
  return 0.5 * (std::abs(r.lambda_plus) - r.lambda_plus + std::abs(r.lambda_minus) -
                r.lambda_minus);
}

double g_function_choi(const Matrix& liouvillian_superop, double eps) {
  const Matrix phi = TwoQubitState::max_entangled().matrix();
  // choi_matrix(L) is (L x id)|Phi><Phi| for any superoperator, not only maps
  const Matrix perturbed = phi + eps * choi_matrix(liouvillian_superop);
  return (trace_norm(perturbed) - 1.0) / eps;
}

double trace_distance(const QubitState& rho, const QubitState& sigma) {
  return 0.5 * trace_norm(rho.matrix() - sigma.matrix());
}

TwoQubitState ancilla_state(const Matrix& map_superop) {
  const Matrix choi = choi_matrix(map_superop);
  if (std::abs(choi.trace() - Complex(1.0)) > 1e-9)
    throw std::invalid_argument("ancilla_state: map is not trace-preserving");
  const auto ev = hermitian_eigenvalues(choi, 1e-8);
  if (ev.minCoeff() < -1e-8)
    throw std::invalid_argument("ancilla_state: map is not completely positive");
  // shed the tolerated numerical residue so the state invariants hold exactly
  Matrix m = 0.5 * (choi + choi.adjoint().eval());
  m /= m.trace().real();
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  Eigen::VectorXd vals = es.eigenvalues().cwiseMax(0.0);
  m = es.eigenvectors() * vals.asDiagonal() * es.eigenvectors().adjoint();
  m /= m.trace().real();
  return TwoQubitState(m);
}

double log_negativity(const TwoQubitState& rho) {
  const double tn = trace_norm(partial_transpose(rho.matrix(), Subsystem::Ancilla));
  return std::max(0.0, std::log2(tn));
}

double l1_coherence(const Matrix& rho) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < rho.rows(); ++i)
    for (Eigen::Index j = 0; j < rho.cols(); ++j)
      if (i != j) sum += std::abs(rho(i, j));
  return sum;
}

namespace {

void parallel_for(size_t n, unsigned threads, const std::function<void(size_t)>& body) {
  unsigned hw = threads ? threads : std::thread::hardware_concurrency();
  hw = std::max(1u, std::min<unsigned>(hw, 16));
  if (hw == 1 || n < 4) {
    for (size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<size_t> next{0};
  for (unsigned k = 0; k < hw; ++k)
    pool.emplace_back([&] {
      for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

std::vector<WitnessRecord> witness_series(const CoefficientEngine& engine,
                                          const std::vector<double>& grid, unsigned threads) {
  for (size_t i = 0; i + 1 < grid.size(); ++i)
    if (!(grid[i] < grid[i + 1]))
      throw std::invalid_argument("witness_series: grid must be strictly increasing");

  const DaviesRates dr = davies_rates(engine);
  const Vector v_excited = vectorize(QubitState::excited().matrix());
  const Vector v_plus = vectorize(QubitState::plus().matrix());
  const Vector v_sy = vectorize(ops::sigma_y());

  std::vector<WitnessRecord> out(grid.size());
  parallel_for(grid.size(), threads, [&](size_t i) {
    const double t = grid[i];
    WitnessRecord r;
    r.t = t;

    const LiouvillianCoefficients lc = engine.liouvillian_coefficients(t);
    const CanonicalRates rates = canonical_rates(lc);
    r.lambda_plus = rates.lambda_plus;
    r.lambda_minus = rates.lambda_minus;
    r.g = g_function(rates);
    r.delta = lc.delta;

    const Matrix map = (t == 0.0) ? Matrix(Matrix::Identity(4, 4)) : dynamical_map(engine, t);
    r.trace_distance_sy = 0.5 * trace_norm(devectorize(map * v_sy));
    const TwoQubitState ext = ancilla_state(map);
    r.log_negativity = log_negativity(ext);
    r.l1_coherence = l1_coherence(ext.matrix());

    const Matrix rho_exc = devectorize(map * v_excited);
    const Matrix rho_plus = devectorize(map * v_plus);
    r.population_excited = rho_exc(1, 1).real();
    r.coherence_abs = std::abs(rho_plus(1, 0));
    r.l1_coherence_qubit = 2.0 * r.coherence_abs;

    // Davies semigroup reference: closed-form populations and coherence decay
    const double gsum = dr.decay + dr.pump;
    const double p_inf = (gsum > 0) ? dr.pump / gsum : 1.0;
    r.population_davies = p_inf + (1.0 - p_inf) * std::exp(-gsum * t);
    r.coherence_davies = 0.5 * std::exp(-0.5 * gsum * t);
    r.g_davies = 0.0;

    out[i] = r;
  });
  return out;
}

}  // namespace rwc
