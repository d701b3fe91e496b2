// bath.hpp — Ohmic bath spectral density and thermal occupation
//
// Units: hbar = k_B = 1 and omega_0 = 1; frequencies and temperatures are in
// units of the qubit splitting, times in its inverse.

#pragma once

#include <stdexcept>

namespace rwc {

struct OhmicBath {
  double alpha;        // dimensionless coupling, > 0
  double omega_c;      // exponential cutoff, > 0
  double temperature;  // >= 0

  OhmicBath(double alpha_, double omega_c_, double temperature_)
      : alpha(alpha_), omega_c(omega_c_), temperature(temperature_) {
    if (!(alpha > 0)) throw std::invalid_argument("OhmicBath: alpha must be > 0");
    if (!(omega_c > 0)) throw std::invalid_argument("OhmicBath: omega_c must be > 0");
    if (!(temperature >= 0)) throw std::invalid_argument("OhmicBath: temperature must be >= 0");
  }
};

// J(w) = alpha * w * exp(-w/omega_c); J(0) = 0. Throws on negative w.
double spectral_density(const OhmicBath& b, double omega);

// Bose factor [exp(w/T)-1]^-1 for w > 0; identically 0 at T = 0.
// Uses exp(-w/T) beyond w/T = 700 to avoid overflow. Throws on w <= 0.
double occupation(const OhmicBath& b, double omega);

// J(w)[n(w)+1] and J(w) n(w). Both are defined at w = 0 by their analytic
// limits (alpha*T for either branch at T > 0, 0 at T = 0).
double thermal_weight_plus(const OhmicBath& b, double omega);
double thermal_weight_minus(const OhmicBath& b, double omega);

// J(w)[2 n(w)+1] = plus + minus, evaluated in one stable expression.
double thermal_weight_sym(const OhmicBath& b, double omega);

}  // namespace rwc
