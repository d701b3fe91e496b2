#include <doctest.h>

#include <cmath>

#include "rwc/spectral_table.hpp"

using namespace rwc;

namespace {

// closed form at T = 0: S(w) = alpha [ -w_c + w e^{-w/w_c} Ei(w/w_c) ]
double shift_t0_closed(const OhmicBath& b, double w) {
  if (w == 0.0) return -b.alpha * b.omega_c;
  return b.alpha * (-b.omega_c + w * std::exp(-w / b.omega_c) * std::expint(w / b.omega_c));
}

}  // namespace

TEST_CASE("monotone cubic interpolation") {
  std::vector<double> x{0.0, 1.0, 2.0, 3.5, 5.0};
  std::vector<double> y;
  for (double xi : x) y.push_back(std::tanh(xi - 2.0));
  const MonotoneCubic mc(x, y);
  for (size_t i = 0; i < x.size(); ++i) CHECK(mc(x[i]) == doctest::Approx(y[i]).epsilon(1e-14));
  // monotone data stays monotone between nodes
  double prev = mc(0.0);
  for (double xx = 0.02; xx <= 5.0; xx += 0.02) {
    const double cur = mc(xx);
    CHECK(cur >= prev - 1e-12);
    prev = cur;
  }
  CHECK_THROWS_AS(MonotoneCubic({0.0, 0.0}, {1.0, 2.0}), std::invalid_argument);
}

TEST_CASE("shift table reproduces the closed form at T = 0") {
  const OhmicBath b(0.05, 5.0, 0.0);
  const SpectralShiftTable table(b, 1.0);
  CHECK(table.omega_max() == doctest::Approx(51.0));
  for (double w : {-20.0, -5.0, -1.0, -0.3, 0.5, 1.0, 3.0, 10.0, 30.0}) {
    const double closed = shift_t0_closed(b, w);
    CHECK(std::abs(table.shift_exact(w) - closed) < 1e-8);
    CHECK(std::abs(table.shift(w) - closed) < 3e-7);
  }
  CHECK(table.shift_exact(0.0) == doctest::Approx(-0.25).epsilon(1e-9));
  // Lamb shift of the long-time generator
  const double lamb = 0.5 * (table.shift(1.0) - table.shift(-1.0));
  CHECK(lamb == doctest::Approx(-0.0541537352978844).epsilon(1e-5));
}

TEST_CASE("shift table at finite temperature") {
  const OhmicBath b(0.05, 5.0, 1.0);
  const SpectralShiftTable table(b, 1.0);
  // S_T(w) + S_T(-w) is temperature independent: compare with the T = 0 form
  const OhmicBath b0(0.05, 5.0, 0.0);
  for (double w : {0.4, 1.0, 2.5, 7.0}) {
    const double lhs = table.shift_exact(w) + table.shift_exact(-w);
    const double rhs = shift_t0_closed(b0, w) + shift_t0_closed(b0, -w);
    CHECK(std::abs(lhs - rhs) < 1e-8);
    CHECK(std::abs(table.shift(w) + table.shift(-w) - rhs) < 5e-7);
  }
}

TEST_CASE("moments") {
  const OhmicBath b(0.05, 5.0, 0.0);
  const SpectralShiftTable table(b, 1.0);
  // int alpha w^{2k+1} e^{-w/w_c} = alpha (2k+1)! w_c^{2k+2}
  CHECK(table.moment(0) == doctest::Approx(1.25).epsilon(1e-9));
  CHECK(table.moment(1) == doctest::Approx(187.5).epsilon(1e-9));
  CHECK(table.moment(2) == doctest::Approx(93750.0).epsilon(1e-9));
  CHECK_THROWS_AS(table.moment(3), std::invalid_argument);
}
