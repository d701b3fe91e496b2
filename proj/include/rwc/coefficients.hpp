// coefficients.hpp — Exponent coefficients of the refined weak coupling map for
// the transverse spin-boson model, their time derivatives, and the closed-form
// coefficients of the exact time-local Liouvillian.

#pragma once

#include <complex>
#include <memory>

#include "rwc/bath.hpp"
#include "rwc/quadrature.hpp"
#include "rwc/spectral_table.hpp"

namespace rwc {

using Complex = std::complex<double>;

// Coefficients of Z(t): all vanish at t = 0, gamma_pp/mm >= 0, and the 2x2
// matrix [[gamma_pp, gamma_pm], [conj, gamma_mm]] is PSD up to quadrature noise.
struct SBCoefficients {
  double t = 0.0;
  double gamma_pp = 0.0;   // pump channel weight
  double gamma_mm = 0.0;   // decay channel weight
  Complex gamma_pm{0, 0};  // cross channel; the conjugate pairs with it
  double xi = 0.0;         // coherent sigma_z weight (time-integrated shift)
};

struct CoefficientDerivatives {
  double d_gamma_pp = 0.0;
  double d_gamma_mm = 0.0;
  Complex d_gamma_pm{0, 0};
  double d_xi = 0.0;
};

// Coefficients of the time-local generator L(t) in the same operator template.
struct LiouvillianCoefficients {
  double t = 0.0;
  double delta = 0.0;  // time-dependent Lamb shift
  double gamma_pp = 0.0;
  double gamma_mm = 0.0;
  Complex gamma_pm{0, 0};
};

struct Tolerances {
  double quad_abs = 1e-10;
  double quad_rel = 1e-8;
  double table_interp = 1e-7;
};

// Closed-form map (coefficients, derivatives) -> Liouvillian coefficients.
// Degenerate denominators are handled by series branches; the hyperbolic and
// trigonometric regimes share one code path through complex intermediates.
LiouvillianCoefficients liouvillian_coefficients(const SBCoefficients& c,
                                                 const CoefficientDerivatives& d);

// Min eigenvalue of the 2x2 channel-coefficient matrix (PSD check).
double coefficient_matrix_min_eigenvalue(const SBCoefficients& c);

// Owns the bath, the S(w) table, and the quadrature configuration. All queries
// are const and safe to share across threads.
class CoefficientEngine {
 public:
  explicit CoefficientEngine(OhmicBath bath, double omega0 = 1.0, Tolerances tol = {});

  SBCoefficients coefficients(double t) const;
  CoefficientDerivatives derivatives(double t) const;
  LiouvillianCoefficients liouvillian_coefficients(double t) const;

  const OhmicBath& bath() const { return bath_; }
  double omega0() const { return omega0_; }
  const SpectralShiftTable& shift_table() const { return *table_; }
  const Tolerances& tolerances() const { return tol_; }

  // Lamb-shift weight Xi(t) from the tabulated S(w) plus tail corrections, and
  // its analytic time derivative. Exposed for cross-checks.
  double xi(double t) const;
  double xi_dot(double t) const;

 private:
  OhmicBath bath_;
  double omega0_;
  Tolerances tol_;
  std::shared_ptr<const SpectralShiftTable> table_;
  double xi_tail_mean_ = 0.0;  // t-independent mean of the |w| > Omega tail

  QuadratureOptions quad_opts() const;
  double d_asym(double w) const;  // moment expansion of S(w) - S(-w) beyond Omega
};

}  // namespace rwc
