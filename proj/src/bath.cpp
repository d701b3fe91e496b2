#include "rwc/bath.hpp"

#include <cmath>

namespace rwc {

double spectral_density(const OhmicBath& b, double omega) {
  if (omega < 0) throw std::invalid_argument("spectral_density: omega must be >= 0");
  return b.alpha * omega * std::exp(-omega / b.omega_c);
}

double occupation(const OhmicBath& b, double omega) {
  if (!(omega > 0)) throw std::invalid_argument("occupation: omega must be > 0");
  if (b.temperature == 0) return 0.0;
  const double x = omega / b.temperature;
  if (x > 700) return std::exp(-x);
  return 1.0 / std::expm1(x);
}

double thermal_weight_plus(const OhmicBath& b, double omega) {
  if (omega < 0) throw std::invalid_argument("thermal_weight_plus: omega must be >= 0");
  const double cutoff = std::exp(-omega / b.omega_c);
  if (b.temperature == 0) return b.alpha * omega * cutoff;
  const double x = omega / b.temperature;
  if (x > 700) return b.alpha * omega * cutoff;
  // w*(n+1) = w / (1 - e^{-x}), -> T as w -> 0
  const double wn1 = (x < 1e-12) ? b.temperature : omega / (-std::expm1(-x));
  return b.alpha * cutoff * wn1;
}

double thermal_weight_minus(const OhmicBath& b, double omega) {
  if (omega < 0) throw std::invalid_argument("thermal_weight_minus: omega must be >= 0");
  if (b.temperature == 0) return 0.0;
  const double x = omega / b.temperature;
  if (x > 700) return b.alpha * omega * std::exp(-omega / b.omega_c) * std::exp(-x);
  // w*n = w / (e^x - 1), -> T as w -> 0
  const double wn = (x < 1e-12) ? b.temperature : omega / std::expm1(x);
  return b.alpha * std::exp(-omega / b.omega_c) * wn;
}

double thermal_weight_sym(const OhmicBath& b, double omega) {
  if (omega < 0) throw std::invalid_argument("thermal_weight_sym: omega must be >= 0");
  const double cutoff = std::exp(-omega / b.omega_c);
  if (b.temperature == 0) return b.alpha * omega * cutoff;
  const double x = omega / b.temperature;
  if (x > 700) return b.alpha * omega * cutoff;
  // w*(2n+1) = w * coth(x/2), -> 2T as w -> 0
  const double wcoth = (x < 1e-12) ? 2.0 * b.temperature : omega / std::tanh(0.5 * x);
  return b.alpha * cutoff * wcoth;
}

}  // namespace rwc
