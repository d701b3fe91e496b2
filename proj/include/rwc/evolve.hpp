// evolve.hpp — State trajectories: independent e^{Z(t)} applications or
// adaptive Runge-Kutta integration of the time-local master equation.

#pragma once

#include <vector>

#include "rwc/generator.hpp"
#include "rwc/state.hpp"

namespace rwc {

enum class Backend { Map, Ode };

struct OdeOptions {
  double abs_tol = 1e-9;
  double rel_tol = 1e-9;
  double initial_step = 1e-3;
  double max_step = 0.5;
};

// States at the grid times (grid increasing from 0). The map backend applies
// e^{Z(t)} at each time independently; the ode backend integrates
// d rho/dt = L(t) rho with an embedded Dormand-Prince 5(4) pair.
std::vector<QubitState> evolve(const CoefficientEngine& engine, const QubitState& rho0,
                               const std::vector<double>& grid, Backend backend,
                               const OdeOptions& opts = {});

}  // namespace rwc
