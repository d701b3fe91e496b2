#include "rwc/spectral_table.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace rwc {

namespace {

double sign(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }

}  // namespace

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const size_t n = x_.size();
  if (n < 2 || y_.size() != n) throw std::invalid_argument("MonotoneCubic: need >= 2 nodes");
  for (size_t i = 0; i + 1 < n; ++i)
    if (!(x_[i] < x_[i + 1])) throw std::invalid_argument("MonotoneCubic: nodes not increasing");
  std::vector<double> h(n - 1), s(n - 1);
  for (size_t i = 0; i + 1 < n; ++i) {
    h[i] = x_[i + 1] - x_[i];
    s[i] = (y_[i + 1] - y_[i]) / h[i];
  }
  m_.resize(n);
  for (size_t i = 1; i + 1 < n; ++i) {
    const double p = (s[i - 1] * h[i] + s[i] * h[i - 1]) / (h[i - 1] + h[i]);
    m_[i] = (sign(s[i - 1]) + sign(s[i])) *
            std::min({std::abs(s[i - 1]), std::abs(s[i]), 0.5 * std::abs(p)});
  }
  auto boundary = [](double s0, double s1, double h0, double h1) {
    const double p = s0 * (1.0 + h0 / (h0 + h1)) - s1 * h0 / (h0 + h1);
    if (p * s0 <= 0) return 0.0;
    if (std::abs(p) > 2 * std::abs(s0)) return 2 * s0;
    return p;
  };
  if (n == 2) {
    m_[0] = m_[1] = s[0];
  } else {
    m_[0] = boundary(s[0], s[1], h[0], h[1]);
    m_[n - 1] = boundary(s[n - 2], s[n - 3], h[n - 2], h[n - 3]);
  }
}

double MonotoneCubic::operator()(double x) const {
  if (x <= x_.front()) return y_.front() + m_.front() * (x - x_.front());
  if (x >= x_.back()) return y_.back() + m_.back() * (x - x_.back());
  const auto it = std::upper_bound(x_.begin(), x_.end(), x);
  const size_t i = static_cast<size_t>(it - x_.begin()) - 1;
  const double h = x_[i + 1] - x_[i];
  const double u = (x - x_[i]) / h;
  const double u2 = u * u, u3 = u2 * u;
  return y_[i] * (2 * u3 - 3 * u2 + 1) + h * m_[i] * (u3 - 2 * u2 + u) +
         y_[i + 1] * (-2 * u3 + 3 * u2) + h * m_[i + 1] * (u3 - u2);
}

SpectralShiftTable::SpectralShiftTable(const OhmicBath& bath, double omega0, double interp_tol)
    : bath_(bath), omega0_(omega0) {
  Omega_ = std::max(10.0 * bath_.omega_c, omega0_ + 50.0);
  cut_ = std::max(40.0 * bath_.omega_c, Omega_ + 10.0 * bath_.omega_c);
  inner_opts_.abs_tol = 1e-11;
  inner_opts_.rel_tol = 1e-9;
  for (int k = 0; k < 3; ++k) {
    auto f = [&](double v) {
      return thermal_weight_sym(bath_, v) * std::pow(v, 2.0 * k);
    };
    std::vector<double> interior;
    for (double m : {1.0, 2.0, 5.0, 10.0, 20.0}) interior.push_back(m * bath_.omega_c);
    moments_[k] = integrate_panels(f, 0.0, cut_, inner_opts_, interior).value;
  }
  build(interp_tol);
}

double SpectralShiftTable::moment(int k) const {
  if (k < 0 || k > 2) throw std::invalid_argument("SpectralShiftTable: moment index");
  return moments_[k];
}

double SpectralShiftTable::shift_exact(double omega) const {
  const double B = cut_;
  std::vector<double> interior;
  for (double m : {0.5, 1.0, 2.0, 5.0, 10.0, 20.0}) interior.push_back(m * bath_.omega_c);
  if (omega == 0.0) {
    // the two branches combine to -J(v)/v = -alpha e^{-v/w_c}
    auto f = [&](double v) { return -bath_.alpha * std::exp(-v / bath_.omega_c); };
    return integrate_panels(f, 0.0, B, inner_opts_, interior).value;
  }
  auto wp = [&](double v) { return thermal_weight_plus(bath_, v); };
  auto wm = [&](double v) { return thermal_weight_minus(bath_, v); };
  if (omega > 0) {
    // pole in the plus branch: Wp/(w - v) = -Wp/(v - w)
    const double pv = -principal_value(wp, omega, 0.0, B, inner_opts_).value;
    double reg = 0.0;
    if (bath_.temperature > 0) {
      auto f = [&](double v) { return wm(v) / (omega + v); };
      reg = integrate_panels(f, 0.0, B, inner_opts_, interior).value;
    }
    return pv + reg;
  }
  // omega < 0: pole in the minus branch at v = -omega
  auto f = [&](double v) { return wp(v) / (omega - v); };
  double reg = integrate_panels(f, 0.0, B, inner_opts_, interior).value;
  double pv = 0.0;
  if (bath_.temperature > 0) pv = principal_value(wm, -omega, 0.0, B, inner_opts_).value;
  return reg + pv;
}

double SpectralShiftTable::shift(double omega) const {
  if (std::abs(omega) > Omega_ * (1 + 1e-12))
    throw std::out_of_range("SpectralShiftTable::shift: |omega| beyond table range");
  return interp_(omega);
}

void SpectralShiftTable::build(double interp_tol) {
  std::map<double, double> nodes;
  auto add = [&](double w) {
    if (std::abs(w) > Omega_) return;
    if (nodes.count(w)) return;
    nodes[w] = shift_exact(w);
  };
  add(0.0);
  add(Omega_);
  add(-Omega_);
  // geometric seeding toward 0 resolves the w ln w behaviour of S near zero
  for (double w = 1e-6; w < Omega_; w *= 2.15) {
    add(w);
    add(-w);
  }
  for (double m : {0.5, 1.0, 2.0, 3.0, 5.0, 8.0}) {
    add(m * bath_.omega_c);
    add(-m * bath_.omega_c);
  }
  add(omega0_);
  add(-omega0_);

  for (int pass = 0; pass < 16; ++pass) {
    std::vector<double> xs, ys;
    xs.reserve(nodes.size());
    for (const auto& [x, y] : nodes) {
      xs.push_back(x);
      ys.push_back(y);
    }
    MonotoneCubic interp(xs, ys);
    std::map<double, double> inserts;
    for (size_t i = 0; i + 1 < xs.size(); ++i) {
      const double mid = 0.5 * (xs[i] + xs[i + 1]);
      if (mid <= xs[i] || mid >= xs[i + 1]) continue;
      const double exact = shift_exact(mid);
      if (std::abs(interp(mid) - exact) > interp_tol) inserts[mid] = exact;
    }
    if (inserts.empty()) {
      interp_ = std::move(interp);
      return;
    }
    nodes.insert(inserts.begin(), inserts.end());
  }
  // final grid after the refinement budget
  std::vector<double> xs, ys;
  for (const auto& [x, y] : nodes) {
    xs.push_back(x);
    ys.push_back(y);
  }
  interp_ = MonotoneCubic(xs, ys);
}

}  // namespace rwc
