// generator.hpp — Superoperators of the refined weak coupling description:
// the exponent Z(t), the CPTP map e^{Z(t)}, the exact time-local Liouvillian,
// its defining integral representation, and the long-time (Davies) generator.

#pragma once

#include "rwc/coefficients.hpp"
#include "rwc/linalg.hpp"

namespace rwc {

// GKSL template shared by Z(t), L(t) and the Davies generator:
//   -i shift [sigma_z, rho] + sum_{mu nu} c_{mu nu} (sigma_nu rho sigma_mu^dag
//                                                    - {sigma_mu^dag sigma_nu, rho}/2)
// with c_pp = pump, c_mm = decay, c_pm = cross (c_mp its conjugate).
Matrix gksl_superop(double pump, double decay, Complex cross, double shift);

// Z(t) from its coefficients; rejects channel matrices that fail the PSD
// tolerance, non-finite input, and negative diagonal weights beyond noise.
Matrix sb_exponent(const SBCoefficients& c);

Matrix liouvillian_superop(const LiouvillianCoefficients& lc);

// e^{Z(t)}; CPTP by construction of Z.
Matrix dynamical_map(const CoefficientEngine& engine, double t);

// Closed-form time-local generator.
Matrix liouvillian(const CoefficientEngine& engine, double t);

// L = int_0^1 e^{s Z} Zdot e^{-s Z} ds by fixed-order Gauss-Legendre; the
// independent reference for the closed forms.
Matrix liouvillian_via_integral(const CoefficientEngine& engine, double t, int s_nodes = 32);

struct DaviesRates {
  double decay;      // 2 pi J(w0) (n+1)
  double pump;       // 2 pi J(w0) n
  double lamb_shift; // (S(w0) - S(-w0)) / 2
};

DaviesRates davies_rates(const CoefficientEngine& engine);
Matrix davies_generator(const CoefficientEngine& engine);

// Gauss-Legendre nodes/weights on [0, 1].
void gauss_legendre_01(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace rwc
