#include "rwc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>

namespace rwc {

double sinc(double x) {
  const double ax = std::abs(x);
  if (ax < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

namespace {

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule (QUADPACK).
constexpr int kGK = 15;
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gk15(const Integrand& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fv[kGK];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kXgk[i]);
    fv[14 - i] = f(c + h * kXgk[i]);
  }
  fv[7] = f(c);
  double resk = kWgk[7] * fv[7];
  double resg = kWg[3] * fv[7];
  for (int i = 0; i < 7; ++i) {
    resk += kWgk[i] * (fv[i] + fv[14 - i]);
    if (i % 2 == 1) resg += kWg[i / 2] * (fv[i] + fv[14 - i]);
  }
  // QUADPACK-style error scaling keeps the estimate honest on rough panels.
  const double mean = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fv[7] - mean);
  for (int i = 0; i < 7; ++i)
    resasc += kWgk[i] * (std::abs(fv[i] - mean) + std::abs(fv[14 - i] - mean));
  resasc *= h;
  double err = std::abs((resk - resg) * h);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  return {a, b, resk * h, err};
}

IntegrationResult adaptive(const Integrand& f, const std::vector<double>& edges,
                           const QuadratureOptions& opts) {
  std::priority_queue<Panel> heap;
  double total = 0.0, total_err = 0.0;
  long evals = 0;
  for (size_t i = 0; i + 1 < edges.size(); ++i) {
    Panel p = gk15(f, edges[i], edges[i + 1]);
    evals += kGK;
    total += p.value;
    total_err += p.error;
    heap.push(p);
  }
  int splits = 0;
  while (total_err > std::max(opts.abs_tol, opts.rel_tol * std::abs(total))) {
    if (splits++ >= opts.max_splits || heap.empty()) {
      throw QuadratureError("quadrature did not converge",
                            IntegrationResult{total, total_err, evals});
    }
    Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // panel at machine resolution; accept its contribution as-is
      total_err -= worst.error;
      continue;
    }
    Panel left = gk15(f, worst.a, mid);
    Panel right = gk15(f, mid, worst.b);
    evals += 2 * kGK;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  return {total, total_err, evals};
}

std::vector<double> edges_with_interior(double a, double b, const std::vector<double>& interior) {
  std::vector<double> edges{a};
  for (double x : interior)
    if (x > a && x < b) edges.push_back(x);
  edges.push_back(b);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](double p, double q) { return std::abs(p - q) < 1e-14; }),
              edges.end());
  return edges;
}

}  // namespace

IntegrationResult integrate_panels(const Integrand& f, double a, double b,
                                   const QuadratureOptions& opts,
                                   const std::vector<double>& interior) {
  if (!(b > a)) throw std::invalid_argument("integrate_panels: empty interval");
  return adaptive(f, edges_with_interior(a, b, interior), opts);
}

PanelPlan make_panel_plan(double t, double omega0, double omega_c) {
  if (t < 0) throw std::invalid_argument("make_panel_plan: t must be >= 0");
  PanelPlan plan;
  plan.tail_scale = omega_c;
  if (t == 0.0) {
    plan.breakpoints = {0.0, omega0, omega_c, 5.0 * omega_c};
    std::sort(plan.breakpoints.begin(), plan.breakpoints.end());
    plan.breakpoints.erase(std::unique(plan.breakpoints.begin(), plan.breakpoints.end()),
                           plan.breakpoints.end());
    return plan;
  }
  const double cut = 40.0 * omega_c;
  std::set<double> pts{0.0, cut};
  for (double m : {1.0, 2.0, 5.0, 10.0, 20.0}) {
    if (m * omega_c < cut) pts.insert(m * omega_c);
  }
  // sinc peak at omega0: lobes of width 2pi/t on both sides
  const double dw = 2.0 * M_PI / std::max(t, 1.0);
  for (int k = 1; k <= 8; ++k) {
    const double lo = omega0 - k * dw, hi = omega0 + k * dw;
    if (lo > 0 && lo < cut) pts.insert(lo);
    if (hi < cut) pts.insert(hi);
  }
  pts.insert(omega0);
  // cap panel width so every cos(w t) factor is sampled before refinement
  const double hmax = std::min(2.0, 4.0 * M_PI / std::max(t, 1.0));
  std::vector<double> base(pts.begin(), pts.end());
  std::vector<double>& bp = plan.breakpoints;
  for (size_t i = 0; i + 1 < base.size(); ++i) {
    bp.push_back(base[i]);
    const double len = base[i + 1] - base[i];
    const int n = static_cast<int>(std::ceil(len / hmax));
    for (int k = 1; k < n; ++k) bp.push_back(base[i] + len * k / n);
  }
  bp.push_back(base.back());
  return plan;
}

IntegrationResult integrate_semi_infinite(const Integrand& f, const PanelPlan& plan,
                                          const QuadratureOptions& opts) {
  if (plan.breakpoints.size() < 2)
    throw std::invalid_argument("integrate_semi_infinite: need at least two breakpoints");
  for (size_t i = 0; i + 1 < plan.breakpoints.size(); ++i)
    if (!(plan.breakpoints[i] < plan.breakpoints[i + 1]))
      throw std::invalid_argument("integrate_semi_infinite: breakpoints not increasing");

  IntegrationResult finite = adaptive(f, plan.breakpoints, opts);

  // tail: w in [L, inf) -> u in (0, e^{-L/s}], w = -s ln u, dw = -s/u du
  const double L = plan.breakpoints.back();
  const double s = plan.tail_scale;
  const double uL = std::exp(-L / s);
  auto tail_f = [&](double u) { return f(-s * std::log(u)) * s / u; };
  QuadratureOptions tail_opts = opts;
  tail_opts.abs_tol = std::max(opts.abs_tol, 0.1 * opts.abs_tol + 1e-16);
  IntegrationResult tail = adaptive(tail_f, {0.0, 0.5 * uL, uL}, tail_opts);

  return {finite.value + tail.value, finite.error_estimate + tail.error_estimate,
          finite.evaluations + tail.evaluations};
}

IntegrationResult principal_value(const Integrand& f, double pole, double a, double b,
                                  const QuadratureOptions& opts) {
  if (!(a < pole && pole < b))
    throw std::invalid_argument("principal_value: pole must lie strictly inside the domain");
  const double scale = std::max({1.0, std::abs(pole), b - a});
  const double fc = f(pole);
  // derivatives of f at the pole for the series branch of (f(x)-f(c))/(x-c);
  // the stencil must stay inside [a, b]
  const double h = std::min(1e-5 * scale, 0.45 * std::min(pole - a, b - pole));
  const double fp = (f(pole + h) - f(pole - h)) / (2 * h);
  const double fpp = (f(pole + h) - 2 * fc + f(pole - h)) / (h * h);
  const double branch = 1e-6 * scale;
  auto reg = [&](double x) {
    const double d = x - pole;
    if (std::abs(d) < branch) return fp + 0.5 * fpp * d;
    return (f(x) - fc) / d;
  };
  std::vector<double> interior{pole};
  // cluster a few panels around the pole so the estimator sees the structure
  for (double w : {1e-3, 1e-2, 1e-1}) {
    interior.push_back(pole - w * scale);
    interior.push_back(pole + w * scale);
  }
  IntegrationResult r = integrate_panels(reg, a, b, opts, interior);
  r.value += fc * std::log((b - pole) / (pole - a));
  r.evaluations += 3;
  return r;
}

}  // namespace rwc
