#include "rwc/evolve.hpp"

#include <cmath>
#include <map>

namespace rwc {

namespace {

void check_grid(const std::vector<double>& grid) {
  if (grid.empty()) throw std::invalid_argument("evolve: empty grid");
  if (grid.front() < 0) throw std::invalid_argument("evolve: grid must start at t >= 0");
  for (size_t i = 0; i + 1 < grid.size(); ++i)
    if (!(grid[i] < grid[i + 1])) throw std::invalid_argument("evolve: grid must increase");
}

// Dormand-Prince 5(4) coefficients
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

class LiouvillianCache {
 public:
  explicit LiouvillianCache(const CoefficientEngine& engine) : engine_(engine) {}

  const Matrix& at(double t) {
    auto it = cache_.find(t);
    if (it != cache_.end()) return it->second;
    if (cache_.size() > 256) cache_.clear();
    return cache_.emplace(t, liouvillian(engine_, t)).first->second;
  }

 private:
  const CoefficientEngine& engine_;
  std::map<double, Matrix> cache_;
};

Vector ode_segment(LiouvillianCache& L, Vector y, double t0, double t1, const OdeOptions& o,
                   double& h) {
  double t = t0;
  Vector k1 = L.at(t) * y;
  int rejected_in_a_row = 0;
  while (t < t1) {
    h = std::min({h, o.max_step, t1 - t});
    if (h < 1e-14 * std::max(1.0, std::abs(t)))
      throw std::runtime_error("evolve: step size underflow");
    const Vector k2 = L.at(t + c2 * h) * (y + h * (a21 * k1));
    const Vector k3 = L.at(t + c3 * h) * (y + h * (a31 * k1 + a32 * k2));
    const Vector k4 = L.at(t + c4 * h) * (y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    const Vector k5 = L.at(t + c5 * h) * (y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const Vector k6 =
        L.at(t + h) * (y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const Vector ynew = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const Vector k7 = L.at(t + h) * ynew;
    const Vector err_v =
        h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
    double err = 0.0;
    for (Eigen::Index i = 0; i < y.size(); ++i) {
      const double sc = o.abs_tol + o.rel_tol * std::max(std::abs(y(i)), std::abs(ynew(i)));
      const double r = std::abs(err_v(i)) / sc;
      err += r * r;
    }
    err = std::sqrt(err / y.size());
    if (err <= 1.0) {
      t += h;
      y = ynew;
      k1 = k7;  // FSAL
      rejected_in_a_row = 0;
    } else if (++rejected_in_a_row > 50) {
      throw std::runtime_error("evolve: repeated step rejection");
    }
    const double factor = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
    h *= std::clamp(factor, 0.2, 5.0);
  }
  return y;
}

}  // namespace

std::vector<QubitState> evolve(const CoefficientEngine& engine, const QubitState& rho0,
                               const std::vector<double>& grid, Backend backend,
                               const OdeOptions& opts) {
  check_grid(grid);
  std::vector<QubitState> out;
  out.reserve(grid.size());
  const Vector v0 = vectorize(rho0.matrix());

  if (backend == Backend::Map) {
    for (double t : grid) {
      if (t == 0.0) {
        out.push_back(rho0);
        continue;
      }
      out.emplace_back(devectorize(dynamical_map(engine, t) * v0));
    }
    return out;
  }

  LiouvillianCache cache(engine);
  Vector y = v0;
  double t_prev = 0.0;
  double h = opts.initial_step;
  for (double t : grid) {
    if (t > t_prev) {
      y = ode_segment(cache, y, t_prev, t, opts, h);
      t_prev = t;
    }
    Matrix rho = devectorize(y);
    rho = 0.5 * (rho + rho.adjoint().eval());  // shed integrator roundoff
    rho /= rho.trace().real();
    out.emplace_back(rho);
  }
  return out;
}

}  // namespace rwc
