// linalg.hpp — Dense complex matrix/superoperator calculus at qubit scale
//
// Conventions used throughout the library:
//   * Basis ordering (|0>, |1>) with |0> the ground state: sigma_z = diag(-1, +1),
//     sigma_plus = |1><0|, sigma_minus = |0><1|.
//   * vectorize() stacks columns, so vec(A rho B) = kron(B^T, A) vec(rho).
//   * Two-qubit indices are (system, ancilla) with row index 2*s + a, i.e. the
//     system is the first tensor factor.

#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace rwc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

namespace ops {

Matrix identity(int dim);
Matrix sigma_x();
Matrix sigma_y();
Matrix sigma_z();
Matrix sigma_plus();   // |1><0|, raises ground -> excited
Matrix sigma_minus();  // |0><1|
Matrix basis_matrix(int dim, int i, int j);  // |i><j|

}  // namespace ops

// Column-stacking vectorization. Accepts square matrices of dim 2 or 4.
Vector vectorize(const Matrix& m);
Matrix devectorize(const Vector& v);

Matrix kron(const Matrix& a, const Matrix& b);

// Matrix exponential by scaling-and-squaring with a Pade kernel.
// Throws std::invalid_argument on non-finite input.
Matrix matrix_exp(const Matrix& m);

// Sum of singular values.
double trace_norm(const Matrix& m);

// Eigenvalues of a Hermitian matrix, ascending. Throws if the input deviates
// from Hermiticity by more than hermiticity_tol (relative to the norm).
Eigen::VectorXd hermitian_eigenvalues(const Matrix& m, double hermiticity_tol = 1e-10);

enum class Subsystem { System = 0, Ancilla = 1 };

// Partial transpose of a 4x4 two-qubit matrix over the chosen factor.
Matrix partial_transpose(const Matrix& m, Subsystem which);

// Choi matrix of a qubit superoperator (4x4, column-stacking convention):
// (Lambda x id)|Phi><Phi| with |Phi> = (|00> + |11>)/sqrt(2). A trace-preserving
// map yields a unit-trace Choi matrix; the map is CP iff the Choi matrix is PSD.
Matrix choi_matrix(const Matrix& superop);

// True when L(X^dag) = (L(X))^dag holds on all basis matrices to tol.
bool is_hermiticity_preserving(const Matrix& superop, double tol = 1e-10);

// PSD tolerance used for Choi / state checks: eigenvalue >= -floor*(1+||m||).
inline double psd_floor(const Matrix& m, double floor = 1e-10) {
  return -floor * (1.0 + m.norm());
}

bool all_finite(const Matrix& m);

}  // namespace rwc
