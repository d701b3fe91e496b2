// spectral_table.hpp — Principal-value shift integral S(w), tabulated once per
// bath on an adaptive grid with monotone cubic interpolation.
//
//   S(w) = P.V. int_0^inf dv [ Wp(v)/(w - v) + Wm(v)/(w + v) ],
//   Wp = J(n+1), Wm = J n.
//
// S is t-independent, so the time-dependent Lamb-shift integrals only read the
// table. The table spans [-Omega, Omega] with Omega = max(10 w_c, w0 + 50);
// beyond that the odd part is handled by a moment expansion (see coefficients).

#pragma once

#include <vector>

#include "rwc/bath.hpp"
#include "rwc/quadrature.hpp"

namespace rwc {

// Monotonicity-preserving cubic Hermite interpolation (Steffen slopes).
class MonotoneCubic {
 public:
  MonotoneCubic() = default;
  MonotoneCubic(std::vector<double> x, std::vector<double> y);
  double operator()(double x) const;
  const std::vector<double>& nodes() const { return x_; }

 private:
  std::vector<double> x_, y_, m_;
};

class SpectralShiftTable {
 public:
  SpectralShiftTable(const OhmicBath& bath, double omega0, double interp_tol = 1e-7);

  double shift(double omega) const;        // interpolated S(w), |w| <= omega_max
  double shift_exact(double omega) const;  // direct quadrature (table build, tests)
  double odd_difference(double omega) const { return shift(omega) - shift(-omega); }

  double omega_max() const { return Omega_; }
  // M_{2k} = int_0^inf J (2n+1) v^{2k} dv, k = 0, 1, 2 (tail expansion of S_odd)
  double moment(int k) const;
  const OhmicBath& bath() const { return bath_; }
  std::size_t node_count() const { return interp_.nodes().size(); }

 private:
  OhmicBath bath_;
  double omega0_;
  double Omega_;
  double cut_;  // upper truncation of the exponentially damped v-integrals
  double moments_[3];
  MonotoneCubic interp_;
  QuadratureOptions inner_opts_;

  void build(double interp_tol);
};

}  // namespace rwc
