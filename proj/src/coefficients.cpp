#include "rwc/coefficients.hpp"

#include <cmath>

namespace rwc {

namespace {

// t^2 sinc^2((w0 -+ w) t / 2)
double sinc_sq_kernel(double x, double t) {
  const double s = sinc(0.5 * x * t);
  return t * t * s * s;
}

// Cross kernel: t^2 sinc[(w0+w)t/2] sinc[(w0-w)t/2] = 2[cos(wt)-cos(w0 t)]/(w0^2-w^2),
// written against x = w - w0 so the removable point at w = w0 stays stable.
double cross_kernel(double w, double w0, double t) {
  const double x = w - w0;
  const double s2 = sinc(0.5 * x * t);
  return (std::cos(w0 * t) * x * t * t * s2 * s2 + 2.0 * t * std::sin(w0 * t) * sinc(x * t)) /
         (2.0 * w0 + x);
}

// d/dt of the cross kernel: 2[w0 sin(w0 t) - w sin(w t)]/(w0^2 - w^2).
double cross_kernel_dot(double w, double w0, double t) {
  const double x = w - w0;
  const double s2 = sinc(0.5 * x * t);
  return (-w0 * std::sin(w0 * t) * x * t * t * s2 * s2 + 2.0 * std::sin(w0 * t) * std::cos(x * t) +
          2.0 * (w0 + x) * std::cos(w0 * t) * t * sinc(x * t)) /
         (2.0 * w0 + x);
}

struct SeriesBranch {
  // phi = (1 - e^{-s})/s, psi = (s - 1 + e^{-s})/s^2 with series near 0
  static void phi_psi(double s, double& phi, double& psi) {
    if (std::abs(s) < 1e-6) {
      phi = 1.0 - s / 2.0 + s * s / 6.0 - s * s * s / 24.0;
      psi = 0.5 - s / 6.0 + s * s / 24.0 - s * s * s / 120.0;
    } else {
      const double em = std::exp(-s);
      phi = (1.0 - em) / s;
      psi = (s - 1.0 + em) / (s * s);
    }
  }
};

}  // namespace

double coefficient_matrix_min_eigenvalue(const SBCoefficients& c) {
  const double mean = 0.5 * (c.gamma_pp + c.gamma_mm);
  const double half = 0.5 * (c.gamma_pp - c.gamma_mm);
  return mean - std::sqrt(half * half + std::norm(c.gamma_pm));
}

LiouvillianCoefficients liouvillian_coefficients(const SBCoefficients& c,
                                                 const CoefficientDerivatives& d) {
  LiouvillianCoefficients out;
  out.t = c.t;

  // population channel: gamma = phi(s) Gdot + psi(s) sdot G
  const double s = c.gamma_pp + c.gamma_mm;
  const double sd = d.d_gamma_pp + d.d_gamma_mm;
  double phi, psi;
  SeriesBranch::phi_psi(s, phi, psi);
  out.gamma_pp = phi * d.d_gamma_pp + psi * sd * c.gamma_pp;
  out.gamma_mm = phi * d.d_gamma_mm + psi * sd * c.gamma_mm;

  // coherence channel through one complex-analytic path; z < 0 is the
  // trigonometric regime, reached automatically by the principal square root
  const Complex g = c.gamma_pm;
  const Complex gd = d.d_gamma_pm;
  const double xi = c.xi, xid = d.d_xi;
  const double z = std::norm(g) - 4.0 * xi * xi;
  const double zd = 2.0 * std::real(gd * std::conj(g)) - 8.0 * xi * xid;

  Complex sh, P, Q;
  if (std::abs(z) < 1e-8) {
    sh = 1.0 + 2.0 * z / 3.0 + 2.0 * z * z / 15.0;
    P = -(2.0 / 3.0 + 2.0 * z / 15.0 + 4.0 * z * z / 315.0);
    Q = 2.0 + 2.0 * z / 3.0 + 4.0 * z * z / 45.0;
  } else {
    const Complex r = std::sqrt(Complex(z, 0.0));
    sh = std::sinh(2.0 * r) / (2.0 * r);
    const Complex ch = std::cosh(2.0 * r);
    P = (1.0 - sh) / z;
    Q = (ch - 1.0) / z;
  }

  const Complex gamma_pm =
      0.5 * zd * P * g + sh * gd + Complex(0, 1) * (xi * gd - xid * g) * Q;
  const Complex delta =
      0.5 * zd * P * xi + sh * xid - std::imag(std::conj(g) * gd) * Q / 4.0;

  // the hyperbolic functions of sqrt(z) are real for real z; enforce it
  if (std::abs(std::imag(delta)) > 1e-9 * std::max(1.0, std::abs(delta)))
    throw std::runtime_error("liouvillian_coefficients: imaginary residue in delta");
  out.gamma_pm = gamma_pm;
  out.delta = std::real(delta);
  return out;
}

CoefficientEngine::CoefficientEngine(OhmicBath bath, double omega0, Tolerances tol)
    : bath_(bath), omega0_(omega0), tol_(tol) {
  table_ = std::make_shared<const SpectralShiftTable>(bath_, omega0_, tol_.table_interp);

  // t-independent mean of the |w| > Omega tail of the Xi outer integral
  const double Om = table_->omega_max();
  auto mean_kernel = [&](double u) {
    const double w = 1.0 / u;
    const double k = 2.0 / ((w - omega0_) * (w - omega0_)) - 2.0 / ((w + omega0_) * (w + omega0_));
    return k * d_asym(w) / (u * u);
  };
  xi_tail_mean_ =
      integrate_panels(mean_kernel, 0.0, 1.0 / Om, quad_opts()).value / (4.0 * M_PI);
}

QuadratureOptions CoefficientEngine::quad_opts() const {
  QuadratureOptions o;
  o.abs_tol = tol_.quad_abs;
  o.rel_tol = tol_.quad_rel;
  return o;
}

double CoefficientEngine::d_asym(double w) const {
  const double w2 = w * w;
  return 2.0 * (table_->moment(0) + (table_->moment(1) + table_->moment(2) / w2) / w2) / w;
}

SBCoefficients CoefficientEngine::coefficients(double t) const {
  SBCoefficients c;
  c.t = t;
  if (t == 0.0) return c;
  const PanelPlan plan = make_panel_plan(t, omega0_, bath_.omega_c);
  const auto opts = quad_opts();

  auto f_mm = [&](double w) {
    return thermal_weight_plus(bath_, w) * sinc_sq_kernel(omega0_ - w, t) +
           thermal_weight_minus(bath_, w) * sinc_sq_kernel(omega0_ + w, t);
  };
  auto f_pp = [&](double w) {
    return thermal_weight_plus(bath_, w) * sinc_sq_kernel(omega0_ + w, t) +
           thermal_weight_minus(bath_, w) * sinc_sq_kernel(omega0_ - w, t);
  };
  auto f_cross = [&](double w) {
    return thermal_weight_sym(bath_, w) * cross_kernel(w, omega0_, t);
  };
  c.gamma_mm = integrate_semi_infinite(f_mm, plan, opts).value;
  c.gamma_pp = integrate_semi_infinite(f_pp, plan, opts).value;
  const double R = integrate_semi_infinite(f_cross, plan, opts).value;
  c.gamma_pm = std::polar(1.0, -omega0_ * t) * R;
  c.xi = xi(t);
  return c;
}

CoefficientDerivatives CoefficientEngine::derivatives(double t) const {
  CoefficientDerivatives d;
  if (t == 0.0) return d;
  const PanelPlan plan = make_panel_plan(t, omega0_, bath_.omega_c);
  const auto opts = quad_opts();

  auto f_mm = [&](double w) {
    return thermal_weight_plus(bath_, w) * 2.0 * t * sinc((omega0_ - w) * t) +
           thermal_weight_minus(bath_, w) * 2.0 * t * sinc((omega0_ + w) * t);
  };
  auto f_pp = [&](double w) {
    return thermal_weight_plus(bath_, w) * 2.0 * t * sinc((omega0_ + w) * t) +
           thermal_weight_minus(bath_, w) * 2.0 * t * sinc((omega0_ - w) * t);
  };
  auto f_cross = [&](double w) {
    return thermal_weight_sym(bath_, w) * cross_kernel(w, omega0_, t);
  };
  auto f_cross_dot = [&](double w) {
    return thermal_weight_sym(bath_, w) * cross_kernel_dot(w, omega0_, t);
  };
  d.d_gamma_mm = integrate_semi_infinite(f_mm, plan, opts).value;
  d.d_gamma_pp = integrate_semi_infinite(f_pp, plan, opts).value;
  const double R = integrate_semi_infinite(f_cross, plan, opts).value;
  const double Rd = integrate_semi_infinite(f_cross_dot, plan, opts).value;
  d.d_gamma_pm = std::polar(1.0, -omega0_ * t) * Complex(Rd, -omega0_ * R);
  d.d_xi = xi_dot(t);
  return d;
}

LiouvillianCoefficients CoefficientEngine::liouvillian_coefficients(double t) const {
  return rwc::liouvillian_coefficients(coefficients(t), derivatives(t));
}

namespace {

// Oscillatory tails int_Omega^inf trig((w - mu) t) g(w) dw by two integrations
// by parts; the remainder (1/t^2) int trig g'' is integrated under u = 1/w when
// it can matter and otherwise folded into the error estimate.
struct TailKernel {
  std::function<double(double)> g, g1, g2;  // g and its first two derivatives
};

double osc_tail(const TailKernel& k, double Omega, double mu, double t, bool cosine,
                const QuadratureOptions& opts, double* err_out) {
  const double ph = (Omega - mu) * t;
  const double sn = std::sin(ph), cs = std::cos(ph);
  double value;
  if (cosine)
    value = -sn * k.g(Omega) / t - cs * k.g1(Omega) / (t * t);
  else
    value = cs * k.g(Omega) / t - sn * k.g1(Omega) / (t * t);

  const double rem_bound = std::abs(k.g1(Omega)) / (t * t);
  if (rem_bound < 1e-9) {
    *err_out += rem_bound;
    return value;
  }
  auto integrand = [&](double u) {
    const double w = 1.0 / u;
    const double phase = (w - mu) * t;
    const double trig = cosine ? std::cos(phase) : std::sin(phase);
    return trig * k.g2(w) / (u * u);
  };
  QuadratureOptions ro = opts;
  ro.abs_tol = std::max(1e-13, 0.1 * opts.abs_tol);
  ro.max_splits = 6000;
  IntegrationResult rem;
  try {
    rem = integrate_panels(integrand, 0.0, 1.0 / Omega, ro);
  } catch (const QuadratureError& e) {
    rem = e.best_estimate;
  }
  value -= rem.value / (t * t);
  *err_out += rem.error_estimate / (t * t);
  return value;
}

}  // namespace

double CoefficientEngine::xi(double t) const {
  if (t == 0.0) return 0.0;
  const double Om = table_->omega_max();
  const auto opts = quad_opts();
  auto outer = [&](double w) {
    const double K = sinc_sq_kernel(omega0_ - w, t) - sinc_sq_kernel(omega0_ + w, t);
    return K * table_->odd_difference(w);
  };
  std::vector<double> interior;
  for (double b : make_panel_plan(t, omega0_, bath_.omega_c).breakpoints)
    if (b > 0 && b < Om) interior.push_back(b);
  const double body = integrate_panels(outer, 0.0, Om, opts, interior).value / (4.0 * M_PI);

  // oscillatory tail of the sinc^2 difference against the moment expansion
  const double M0 = table_->moment(0), M2 = table_->moment(1), M4 = table_->moment(2);
  auto da = [=](double w) {
    const double w2 = w * w;
    return 2.0 * (M0 + (M2 + M4 / w2) / w2) / w;
  };
  auto da1 = [=](double w) {
    const double w2 = w * w;
    return -2.0 * (M0 + (3.0 * M2 + 5.0 * M4 / w2) / w2) / w2;
  };
  auto da2 = [=](double w) {
    const double w2 = w * w;
    return 4.0 * (M0 + (6.0 * M2 + 15.0 * M4 / w2) / w2) / (w2 * w);
  };
  double tail = xi_tail_mean_;
  double tail_err = 0.0;
  for (const double mu : {omega0_, -omega0_}) {
    TailKernel k;
    k.g = [=](double w) { const double r = 1.0 / (w - mu); return da(w) * r * r; };
    k.g1 = [=](double w) {
      const double r = 1.0 / (w - mu);
      return da1(w) * r * r - 2.0 * da(w) * r * r * r;
    };
    k.g2 = [=](double w) {
      const double r = 1.0 / (w - mu);
      return da2(w) * r * r - 4.0 * da1(w) * r * r * r + 6.0 * da(w) * r * r * r * r;
    };
    const double sgn = (mu > 0) ? 1.0 : -1.0;
    tail -= sgn * 2.0 * osc_tail(k, Om, mu, t, /*cosine=*/true, opts, &tail_err) / (4.0 * M_PI);
  }
  return body + tail;
}

double CoefficientEngine::xi_dot(double t) const {
  if (t == 0.0) return 0.0;
  const double Om = table_->omega_max();
  const auto opts = quad_opts();
  auto outer = [&](double w) {
    const double K = 2.0 * t * (sinc((omega0_ - w) * t) - sinc((omega0_ + w) * t));
    return K * table_->odd_difference(w);
  };
  std::vector<double> interior;
  for (double b : make_panel_plan(t, omega0_, bath_.omega_c).breakpoints)
    if (b > 0 && b < Om) interior.push_back(b);
  const double body = integrate_panels(outer, 0.0, Om, opts, interior).value / (4.0 * M_PI);

  const double M0 = table_->moment(0), M2 = table_->moment(1), M4 = table_->moment(2);
  auto da = [=](double w) {
    const double w2 = w * w;
    return 2.0 * (M0 + (M2 + M4 / w2) / w2) / w;
  };
  auto da1 = [=](double w) {
    const double w2 = w * w;
    return -2.0 * (M0 + (3.0 * M2 + 5.0 * M4 / w2) / w2) / w2;
  };
  auto da2 = [=](double w) {
    const double w2 = w * w;
    return 4.0 * (M0 + (6.0 * M2 + 15.0 * M4 / w2) / w2) / (w2 * w);
  };
  double tail = 0.0, tail_err = 0.0;
  for (const double mu : {omega0_, -omega0_}) {
    TailKernel k;
    k.g = [=](double w) { return da(w) / (w - mu); };
    k.g1 = [=](double w) {
      const double r = 1.0 / (w - mu);
      return da1(w) * r - da(w) * r * r;
    };
    k.g2 = [=](double w) {
      const double r = 1.0 / (w - mu);
      return da2(w) * r - 2.0 * da1(w) * r * r + 2.0 * da(w) * r * r * r;
    };
    const double sgn = (mu > 0) ? 1.0 : -1.0;
    // K-dot tail kernel is 2 sin((w - mu) t)/(w - mu)
    tail += sgn * 2.0 * osc_tail(k, Om, mu, t, /*cosine=*/false, opts, &tail_err) / (4.0 * M_PI);
  }
  return body + tail;
}

}  // namespace rwc
