// witness.hpp — Non-Markovianity witnesses: canonical rates, the g function,
// trace distance, ancilla entanglement, and l1 coherence.

#pragma once

#include <vector>

#include "rwc/evolve.hpp"
#include "rwc/generator.hpp"
#include "rwc/state.hpp"

namespace rwc {

struct CanonicalRates {
  double lambda_plus;
  double lambda_minus;
};

// Eigenvalues of the 2x2 channel-coefficient matrix of the generator.
CanonicalRates canonical_rates(const LiouvillianCoefficients& lc);

// g = (|l+| - l+ + |l-| - l-)/2: positive exactly when some rate is negative.
double g_function(const CanonicalRates& r);

// Trace-norm growth rate of the maximally entangled pair under 1 + eps L x id;
// finite-eps evaluation of the divisibility witness, cross-check for the
// rate-based g.
double g_function_choi(const Matrix& liouvillian_superop, double eps = 1e-6);

// (1/2) || rho - sigma ||_1, in [0, 1].
double trace_distance(const QubitState& rho, const QubitState& sigma);

// (map x id)|Phi><Phi|. Rejects maps that are not CPTP within tolerance.
TwoQubitState ancilla_state(const Matrix& map_superop);

// log2 || rho^{T_ancilla} ||_1, >= 0.
double log_negativity(const TwoQubitState& rho);

// Sum of |off-diagonal| entries in the computational (H_S eigen-) basis.
double l1_coherence(const Matrix& rho);

struct WitnessRecord {
  double t = 0.0;
  double lambda_plus = 0.0;
  double lambda_minus = 0.0;
  double g = 0.0;
  double delta = 0.0;
  double trace_distance_sy = 0.0;   // evolved sigma_y eigenstate pair
  double log_negativity = 0.0;      // ancilla-extended state
  double l1_coherence = 0.0;        // ancilla-extended state
  double l1_coherence_qubit = 0.0;  // 2 |rho_12| of the evolved |+> state
  double population_excited = 0.0;  // from rho0 = |1><1|
  double coherence_abs = 0.0;       // |rho_12| of the evolved |+> state
  // Davies semigroup reference columns
  double population_davies = 0.0;
  double coherence_davies = 0.0;
  double g_davies = 0.0;  // identically 0: static GKSL with positive rates
};

// Per-time evaluation of every witness; grid points are independent and are
// dispatched to a small worker pool.
std::vector<WitnessRecord> witness_series(const CoefficientEngine& engine,
                                          const std::vector<double>& grid,
                                          unsigned threads = 0);

}  // namespace rwc
