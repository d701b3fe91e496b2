// state.hpp — Validated density matrices for the qubit and the qubit+ancilla pair

#pragma once

#include "rwc/linalg.hpp"

namespace rwc {

// Density-matrix invariants: Hermitian to 1e-12, unit trace to 1e-12,
// eigenvalues >= -1e-10 (scaled by 1+||rho||). Construction validates.
class QubitState {
 public:
  explicit QubitState(Matrix m);

  const Matrix& matrix() const { return mat_; }
  double population_excited() const { return mat_(1, 1).real(); }
  Complex coherence() const { return mat_(1, 0); }

  static QubitState ground();
  static QubitState excited();
  static QubitState plus();                  // (|0>+|1>)/sqrt(2)
  static QubitState sigma_y_eigenstate(int sign);

 private:
  Matrix mat_;
};

class TwoQubitState {
 public:
  explicit TwoQubitState(Matrix m);
  const Matrix& matrix() const { return mat_; }

  static TwoQubitState max_entangled();      // |Phi><Phi|, |Phi> = (|00>+|11>)/sqrt(2)

 private:
  Matrix mat_;
};

void validate_density_matrix(const Matrix& m, int dim);

}  // namespace rwc
