// quadrature.hpp — Adaptive panel quadrature tuned for the model's kernels:
// semi-infinite integrals of exponentially cut, t-oscillatory integrands, and
// Cauchy principal values by singularity subtraction.

#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace rwc {

struct IntegrationResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
};

// Non-convergence carries the best estimate reached.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, IntegrationResult best)
      : std::runtime_error(what), best_estimate(best) {}
  IntegrationResult best_estimate;
};

using Integrand = std::function<double(double)>;

// Partition of [0, inf): finite panels over `breakpoints`, tail beyond the last
// breakpoint mapped to (0, e^{-L/tail_scale}] by u = e^{-w/tail_scale}.
struct PanelPlan {
  std::vector<double> breakpoints;  // strictly increasing, first = 0
  double tail_scale = 1.0;
};

// Breakpoints resolving the sinc peaks at w0 (width ~ 2pi/t) and the cutoff
// scales; panel width is capped at a few oscillation periods so the global
// cos(w t) factors are resolved before adaptive refinement starts.
PanelPlan make_panel_plan(double t, double omega0, double omega_c);

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_splits = 4000;  // additional panel bisections before giving up
};

// Globally adaptive GK15 over [a, b] with initial subdivision at `interior`.
IntegrationResult integrate_panels(const Integrand& f, double a, double b,
                                   const QuadratureOptions& opts = {},
                                   const std::vector<double>& interior = {});

// Integral of f over [first breakpoint, inf) following the plan.
IntegrationResult integrate_semi_infinite(const Integrand& f, const PanelPlan& plan,
                                          const QuadratureOptions& opts = {});

// P.V. integral of f(x)/(x - pole) over [a, b], f smooth at the pole:
// int (f(x)-f(pole))/(x-pole) dx + f(pole) * ln|(b-pole)/(pole-a)|.
IntegrationResult principal_value(const Integrand& f, double pole, double a, double b,
                                  const QuadratureOptions& opts = {});

// sin(x)/x with a series branch for |x| < 1e-4.
double sinc(double x);

}  // namespace rwc
