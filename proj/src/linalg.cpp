#include "rwc/linalg.hpp"

#include <unsupported/Eigen/MatrixFunctions>

namespace rwc {

namespace ops {

Matrix identity(int dim) { return Matrix::Identity(dim, dim); }

Matrix sigma_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix sigma_y() {
  Matrix m(2, 2);
  m << 0, Complex(0, 1), Complex(0, -1), 0;
  return m;
}

Matrix sigma_z() {
  Matrix m(2, 2);
  m << -1, 0, 0, 1;
  return m;
}

Matrix sigma_plus() {
  Matrix m = Matrix::Zero(2, 2);
  m(1, 0) = 1;
  return m;
}

Matrix sigma_minus() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1;
  return m;
}

Matrix basis_matrix(int dim, int i, int j) {
  Matrix m = Matrix::Zero(dim, dim);
  m(i, j) = 1;
  return m;
}

}  // namespace ops

namespace {

void require_dim(const Matrix& m, const char* what) {
  if (m.rows() != m.cols()) throw std::invalid_argument(std::string(what) + ": matrix not square");
  const auto d = m.rows();
  if (d != 2 && d != 4 && d != 16)
    throw std::invalid_argument(std::string(what) + ": unsupported dimension");
}

}  // namespace

bool all_finite(const Matrix& m) {
  return m.allFinite();
}

Vector vectorize(const Matrix& m) {
  require_dim(m, "vectorize");
  if (m.rows() > 4) throw std::invalid_argument("vectorize: dim must be 2 or 4");
  Vector v(m.size());
  const auto d = m.rows();
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index i = 0; i < d; ++i) v(i + d * j) = m(i, j);
  return v;
}

Matrix devectorize(const Vector& v) {
  const auto n = v.size();
  Eigen::Index d = 0;
  if (n == 4) d = 2;
  else if (n == 16) d = 4;
  else throw std::invalid_argument("devectorize: length must be 4 or 16");
  Matrix m(d, d);
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index i = 0; i < d; ++i) m(i, j) = v(i + d * j);
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix matrix_exp(const Matrix& m) {
  if (!all_finite(m)) throw std::invalid_argument("matrix_exp: non-finite input");
  return m.exp();
}

double trace_norm(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().sum();
}

Eigen::VectorXd hermitian_eigenvalues(const Matrix& m, double hermiticity_tol) {
  const double dev = (m - m.adjoint()).norm();
  if (dev > hermiticity_tol * (1.0 + m.norm()))
    throw std::invalid_argument("hermitian_eigenvalues: input not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

Matrix partial_transpose(const Matrix& m, Subsystem which) {
  if (m.rows() != 4 || m.cols() != 4)
    throw std::invalid_argument("partial_transpose: expected a 4x4 matrix");
  Matrix out(4, 4);
  for (int s = 0; s < 2; ++s)
    for (int a = 0; a < 2; ++a)
      for (int sp = 0; sp < 2; ++sp)
        for (int ap = 0; ap < 2; ++ap) {
          if (which == Subsystem::Ancilla)
            out(2 * s + a, 2 * sp + ap) = m(2 * s + ap, 2 * sp + a);
          else
            out(2 * s + a, 2 * sp + ap) = m(2 * sp + a, 2 * s + ap);
        }
  return out;
}

Matrix choi_matrix(const Matrix& superop) {
  if (superop.rows() != 4 || superop.cols() != 4)
    throw std::invalid_argument("choi_matrix: expected a 4x4 superoperator");
  Matrix choi = Matrix::Zero(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const Matrix lij = devectorize(superop * vectorize(ops::basis_matrix(2, i, j)));
      choi += 0.5 * kron(lij, ops::basis_matrix(2, i, j));
    }
  return choi;
}

bool is_hermiticity_preserving(const Matrix& superop, double tol) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const Matrix e = ops::basis_matrix(2, i, j);
      const Matrix lhs = devectorize(superop * vectorize(Matrix(e.adjoint())));
      const Matrix rhs = devectorize(superop * vectorize(e)).adjoint();
      if ((lhs - rhs).norm() > tol) return false;
    }
  return true;
}

}  // namespace rwc
