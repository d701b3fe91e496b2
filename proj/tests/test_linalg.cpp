#include <doctest.h>

#include <random>

#include "rwc/linalg.hpp"
#include "rwc/state.hpp"

using namespace rwc;

namespace {

Matrix random_density(std::mt19937& rng, int dim) {
  std::normal_distribution<double> n;
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(n(rng), n(rng));
  Matrix rho = g * g.adjoint();
  return rho / rho.trace();
}

}  // namespace

TEST_CASE("vectorize conventions") {
  CHECK(vectorize(ops::identity(2)) == Vector({{1.0, 0.0, 0.0, 1.0}}));

  // |0><1| has its single unit entry at column-stacked index 0 + 2*1
  const Vector v = vectorize(ops::basis_matrix(2, 0, 1));
  int nonzero = 0;
  for (int i = 0; i < 4; ++i)
    if (v(i) != Complex(0)) ++nonzero;
  CHECK(nonzero == 1);
  CHECK(v(2) == Complex(1));

  CHECK(devectorize(vectorize(ops::sigma_x())) == ops::sigma_x());
  for (int dim : {2, 4})
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        const Matrix e = ops::basis_matrix(dim, i, j);
        CHECK(devectorize(vectorize(e)) == e);
      }
  CHECK_THROWS_AS(vectorize(Matrix::Zero(3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(devectorize(Vector::Zero(5)), std::invalid_argument);
}

TEST_CASE("vec(A rho B) = kron(B^T, A) vec(rho)") {
  std::mt19937 rng(11);
  const Matrix a = random_density(rng, 2), b = random_density(rng, 2),
               rho = random_density(rng, 2);
  const Vector lhs = vectorize(a * rho * b);
  const Vector rhs = kron(b.transpose(), a) * vectorize(rho);
  CHECK((lhs - rhs).norm() < 1e-14);
}

TEST_CASE("matrix_exp basics") {
  CHECK((matrix_exp(Matrix::Zero(4, 4)) - Matrix::Identity(4, 4)).norm() == 0.0);

  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = Complex(0.3, -0.2);
  d(1, 1) = Complex(-1.1, 0.7);
  const Matrix e = matrix_exp(d);
  CHECK(std::abs(e(0, 0) - std::exp(d(0, 0))) < 1e-15);
  CHECK(std::abs(e(1, 1) - std::exp(d(1, 1))) < 1e-15);
  CHECK(std::abs(e(0, 1)) == 0.0);

  const Matrix u = matrix_exp(Complex(0, M_PI / 2) * ops::sigma_x());
  const Matrix ui = matrix_exp(Complex(0, -M_PI / 2) * ops::sigma_x());
  CHECK((u * ui - ops::identity(2)).norm() < 1e-12);

  Matrix bad = Matrix::Zero(2, 2);
  bad(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(matrix_exp(bad), std::invalid_argument);
}

TEST_CASE("matrix_exp multiplies for commuting arguments") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int rep = 0; rep < 20; ++rep) {
    Matrix a = Matrix::Zero(4, 4), b = Matrix::Zero(4, 4);
    for (int i = 0; i < 4; ++i) {
      a(i, i) = Complex(u(rng), u(rng));
      b(i, i) = Complex(u(rng), u(rng));
    }
    CHECK((matrix_exp(a + b) - matrix_exp(a) * matrix_exp(b)).norm() < 1e-10);
  }
}

TEST_CASE("choi matrix") {
  const Matrix id_choi = choi_matrix(Matrix::Identity(4, 4));
  CHECK((id_choi - TwoQubitState::max_entangled().matrix()).norm() < 1e-14);

  // conjugation by sigma_x: rank-1, unit trace, PSD
  const Matrix sx = ops::sigma_x();
  const Matrix conj_sx = kron(sx.transpose(), sx);
  const Matrix c = choi_matrix(conj_sx);
  const auto ev = hermitian_eigenvalues(c);
  CHECK(std::abs(c.trace().real() - 1.0) < 1e-14);
  CHECK(ev.minCoeff() > -1e-14);
  int rank = 0;
  for (int i = 0; i < 4; ++i)
    if (ev(i) > 1e-12) ++rank;
  CHECK(rank == 1);

  // transpose map X -> X^T = sum_ij E_ij X E_ij: positive but not CP,
  // Choi eigenvalue -1/2
  Matrix transpose_map = Matrix::Zero(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      transpose_map +=
          kron(ops::basis_matrix(2, i, j).transpose(), ops::basis_matrix(2, i, j));
  const auto tev = hermitian_eigenvalues(choi_matrix(transpose_map));
  CHECK(tev.minCoeff() == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("trace norm, partial transpose, eigenvalues") {
  CHECK(trace_norm(ops::sigma_z()) == doctest::Approx(2.0).epsilon(1e-14));

  const Matrix phi = TwoQubitState::max_entangled().matrix();
  const auto ev = hermitian_eigenvalues(partial_transpose(phi, Subsystem::Ancilla));
  CHECK(ev(0) == doctest::Approx(-0.5).epsilon(1e-12));
  for (int i = 1; i < 4; ++i) CHECK(ev(i) == doctest::Approx(0.5).epsilon(1e-12));
  // transposing the other factor gives the same spectrum for this state
  const auto ev2 = hermitian_eigenvalues(partial_transpose(phi, Subsystem::System));
  CHECK((ev - ev2).norm() < 1e-12);

  const auto ey = hermitian_eigenvalues(ops::sigma_y());
  CHECK(ey(0) == doctest::Approx(-1.0));
  CHECK(ey(1) == doctest::Approx(1.0));

  Matrix non_herm = Matrix::Zero(2, 2);
  non_herm(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eigenvalues(non_herm), std::invalid_argument);
}

TEST_CASE("trace distance bound for random states") {
  std::mt19937 rng(42);
  for (int rep = 0; rep < 50; ++rep) {
    const Matrix rho = random_density(rng, 2), sigma = random_density(rng, 2);
    const double tn = trace_norm(rho - sigma);
    CHECK(tn >= 0.0);
    CHECK(tn <= 2.0 + 1e-12);
  }
}

TEST_CASE("state validation") {
  CHECK(QubitState::excited().population_excited() == 1.0);
  CHECK(QubitState::plus().coherence() == Complex(0.5));
  Matrix not_normalized = 2.0 * ops::basis_matrix(2, 0, 0);
  CHECK_THROWS_AS(QubitState{not_normalized}, std::invalid_argument);
  Matrix negative = Matrix::Zero(2, 2);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  CHECK_THROWS_AS(QubitState{negative}, std::invalid_argument);
  CHECK_THROWS_AS(QubitState{Matrix(ops::sigma_x())}, std::invalid_argument);
}
