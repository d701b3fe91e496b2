#include "rwc/state.hpp"

namespace rwc {

void validate_density_matrix(const Matrix& m, int dim) {
  if (m.rows() != dim || m.cols() != dim)
    throw std::invalid_argument("density matrix: wrong dimension");
  if (!all_finite(m)) throw std::invalid_argument("density matrix: non-finite entries");
  if ((m - m.adjoint()).norm() > 1e-12 * (1.0 + m.norm()))
    throw std::invalid_argument("density matrix: not Hermitian");
  if (std::abs(m.trace() - Complex(1.0)) > 1e-12)
    throw std::invalid_argument("density matrix: trace != 1");
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < psd_floor(m))
    throw std::invalid_argument("density matrix: negative eigenvalue");
}

QubitState::QubitState(Matrix m) : mat_(std::move(m)) { validate_density_matrix(mat_, 2); }

QubitState QubitState::ground() { return QubitState(ops::basis_matrix(2, 0, 0)); }

QubitState QubitState::excited() { return QubitState(ops::basis_matrix(2, 1, 1)); }

QubitState QubitState::plus() {
  Matrix m(2, 2);
  m << 0.5, 0.5, 0.5, 0.5;
  return QubitState(m);
}

QubitState QubitState::sigma_y_eigenstate(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sigma_y_eigenstate: sign must be +-1");
  return QubitState(0.5 * (Matrix::Identity(2, 2) + double(sign) * ops::sigma_y()));
}

TwoQubitState::TwoQubitState(Matrix m) : mat_(std::move(m)) { validate_density_matrix(mat_, 4); }

TwoQubitState TwoQubitState::max_entangled() {
  Vector phi = Vector::Zero(4);
  phi(0) = phi(3) = 1.0 / std::sqrt(2.0);
  return TwoQubitState(phi * phi.adjoint());
}

}  // namespace rwc
