#include "rwc/generator.hpp"

#include <cmath>

namespace rwc {

namespace {

// vec(A rho B) = kron(B^T, A) vec(rho)
Matrix left_right(const Matrix& a, const Matrix& b) { return kron(b.transpose(), a); }

Matrix dissipator(const Matrix& jump_out, const Matrix& jump_in) {
  // sigma_nu rho sigma_mu^dag - {sigma_mu^dag sigma_nu, rho}/2 with
  // jump_in = sigma_nu, jump_out = sigma_mu
  const Matrix id = ops::identity(2);
  const Matrix prod = jump_out.adjoint() * jump_in;
  return left_right(jump_in, jump_out.adjoint()) -
         0.5 * (left_right(prod, id) + left_right(id, prod));
}

}  // namespace

Matrix gksl_superop(double pump, double decay, Complex cross, double shift) {
  const Matrix sz = ops::sigma_z();
  const Matrix sp = ops::sigma_plus();
  const Matrix sm = ops::sigma_minus();
  const Matrix id = ops::identity(2);
  Matrix out = Complex(0, -shift) * (left_right(sz, id) - left_right(id, sz));
  out += pump * dissipator(sp, sp);
  out += decay * dissipator(sm, sm);
  out += cross * dissipator(sp, sm);
  out += std::conj(cross) * dissipator(sm, sp);
  return out;
}

Matrix sb_exponent(const SBCoefficients& c) {
  if (!std::isfinite(c.gamma_pp) || !std::isfinite(c.gamma_mm) || !std::isfinite(c.xi) ||
      !std::isfinite(c.gamma_pm.real()) || !std::isfinite(c.gamma_pm.imag()))
    throw std::invalid_argument("sb_exponent: non-finite coefficients");
  const double scale = 1.0 + c.gamma_pp + c.gamma_mm;
  if (c.gamma_pp < -1e-10 * scale || c.gamma_mm < -1e-10 * scale)
    throw std::invalid_argument("sb_exponent: negative channel weight");
  if (coefficient_matrix_min_eigenvalue(c) < -1e-10 * scale)
    throw std::invalid_argument("sb_exponent: channel matrix not PSD");
  return gksl_superop(c.gamma_pp, c.gamma_mm, c.gamma_pm, c.xi);
}

Matrix liouvillian_superop(const LiouvillianCoefficients& lc) {
  return gksl_superop(lc.gamma_pp, lc.gamma_mm, lc.gamma_pm, lc.delta);
}

Matrix dynamical_map(const CoefficientEngine& engine, double t) {
  return matrix_exp(sb_exponent(engine.coefficients(t)));
}

Matrix liouvillian(const CoefficientEngine& engine, double t) {
  return liouvillian_superop(engine.liouvillian_coefficients(t));
}

void gauss_legendre_01(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre_01: n must be >= 1");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Newton iteration from the Chebyshev estimate
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    nodes[i] = 0.5 * (1.0 - x);
    nodes[n - 1 - i] = 0.5 * (1.0 + x);
    weights[i] = 0.5 * w;
    weights[n - 1 - i] = 0.5 * w;
  }
}

Matrix liouvillian_via_integral(const CoefficientEngine& engine, double t, int s_nodes) {
  if (!(t > 0)) throw std::invalid_argument("liouvillian_via_integral: t must be > 0");
  const SBCoefficients c = engine.coefficients(t);
  const CoefficientDerivatives d = engine.derivatives(t);
  const Matrix Z = sb_exponent(c);
  const Matrix Zd = gksl_superop(d.d_gamma_pp, d.d_gamma_mm, d.d_gamma_pm, d.d_xi);
  std::vector<double> s, w;
  gauss_legendre_01(s_nodes, s, w);
  Matrix L = Matrix::Zero(4, 4);
  for (int i = 0; i < s_nodes; ++i) {
    const Matrix Es = matrix_exp(s[i] * Z);
    const Matrix Esm = matrix_exp(-s[i] * Z);
    L += w[i] * Es * Zd * Esm;
  }
  return L;
}

DaviesRates davies_rates(const CoefficientEngine& engine) {
  const double w0 = engine.omega0();
  DaviesRates r;
  r.decay = 2.0 * M_PI * thermal_weight_plus(engine.bath(), w0);
  r.pump = 2.0 * M_PI * thermal_weight_minus(engine.bath(), w0);
  r.lamb_shift = 0.5 * (engine.shift_table().shift(w0) - engine.shift_table().shift(-w0));
  return r;
}

Matrix davies_generator(const CoefficientEngine& engine) {
  const DaviesRates r = davies_rates(engine);
  return gksl_superop(r.pump, r.decay, Complex(0, 0), r.lamb_shift);
}

}  // namespace rwc
