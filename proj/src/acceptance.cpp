#include "rwc/acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <memory>
#include <sstream>
#include <thread>

#include "rwc/witness.hpp"

namespace rwc {

namespace {

constexpr double kAlpha = 0.05;
constexpr double kOmegaC = 5.0;
constexpr double kFineStep = 0.05;
constexpr double kTMax = 30.0;

std::vector<double> uniform_grid(double step, double tmax, bool include_zero) {
  std::vector<double> g;
  if (include_zero) g.push_back(0.0);
  const int n = static_cast<int>(std::round(tmax / step));
  for (int i = 1; i <= n; ++i) g.push_back(i * step);
  return g;
}

struct Series {
  std::vector<double> t;
  std::vector<LiouvillianCoefficients> lc;
  std::vector<Matrix> map;  // empty unless maps requested
};

Series rate_series(const CoefficientEngine& engine, const std::vector<double>& grid,
                   bool with_maps, unsigned threads) {
  Series s;
  s.t = grid;
  s.lc.resize(grid.size());
  if (with_maps) s.map.resize(grid.size());
  std::vector<std::thread> pool;
  std::atomic<size_t> next{0};
  unsigned hw = threads ? threads : std::thread::hardware_concurrency();
  hw = std::max(1u, std::min<unsigned>(hw, 16));
  auto body = [&](size_t i) {
    s.lc[i] = engine.liouvillian_coefficients(grid[i]);
    if (with_maps)
      s.map[i] = (grid[i] == 0.0) ? Matrix(Matrix::Identity(4, 4)) : dynamical_map(engine, grid[i]);
  };
  if (hw == 1) {
    for (size_t i = 0; i < grid.size(); ++i) body(i);
  } else {
    for (unsigned k = 0; k < hw; ++k)
      pool.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < grid.size(); i = next.fetch_add(1)) body(i);
      });
    for (auto& th : pool) th.join();
  }
  return s;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

std::string format_check_line(const CheckResult& r) {
  std::ostringstream os;
  os.setf(std::ios::scientific);
  os.precision(3);
  os << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << "  measured=" << r.measured
     << "  bound=" << r.bound;
  if (!r.detail.empty()) os << "  (" << r.detail << ")";
  return os.str();
}

std::vector<CheckResult> run_acceptance_checks(unsigned threads) {
  std::vector<CheckResult> out;

  std::vector<std::unique_ptr<CoefficientEngine>> engines;
  const double temps[] = {0.0, 1.0, 5.0};
  for (double T : temps)
    engines.push_back(std::make_unique<CoefficientEngine>(OhmicBath(kAlpha, kOmegaC, T)));
  const CoefficientEngine& e0 = *engines[0];
  const CoefficientEngine& e1 = *engines[1];
  const CoefficientEngine& e5 = *engines[2];

  // 1. CPTP: Choi PSD and trace preservation on the (t, T) grid, within 30 s
  {
    const auto started = std::chrono::steady_clock::now();
    const double ts[] = {0.0, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 30.0, 100.0};
    double min_eig = 0.0, max_tp = 0.0, min_coeff_eig = 0.0;
    for (const auto& eng : engines)
      for (double t : ts) {
        const SBCoefficients c = eng->coefficients(t);
        min_coeff_eig = std::min(min_coeff_eig, coefficient_matrix_min_eigenvalue(c));
        const Matrix map = matrix_exp(sb_exponent(c));
        min_eig = std::min(min_eig, hermitian_eigenvalues(choi_matrix(map), 1e-7).minCoeff());
        for (int col = 0; col < 4; ++col) {
          const Complex tp = map(0, col) + map(3, col) - ((col == 0 || col == 3) ? 1.0 : 0.0);
          max_tp = std::max(max_tp, std::abs(tp));
        }
      }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    std::ostringstream d1;
    d1 << "min Choi eigenvalue over t,T grid; " << secs << " s (limit 30)";
    out.push_back({"01a_cptp_choi_psd", min_eig >= -1e-8 && secs <= 30.0, min_eig, -1e-8,
                   d1.str()});
    out.push_back({"01b_cptp_trace_preserving", max_tp <= 1e-9, max_tp, 1e-9,
                   "max trace-preservation defect"});
    // 2. channel-coefficient matrix PSD on the same grid
    out.push_back({"02_coefficient_matrix_psd", min_coeff_eig >= -1e-10, min_coeff_eig, -1e-10,
                   "min eigenvalue of the 2x2 channel matrix"});
  }

  // 3. closed-form Liouvillian vs its integral representation, within 60 s
  {
    const auto started = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (const CoefficientEngine* eng : {&e0, &e1})
      for (double t : {0.5, 1.0, 2.0, 5.0, 10.0, 20.0}) {
        const Matrix a = liouvillian(*eng, t);
        const Matrix b = liouvillian_via_integral(*eng, t, 32);
        worst = std::max(worst, (a - b).cwiseAbs().maxCoeff());
      }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    std::ostringstream d3;
    d3 << "max |closed form - s-integral| elementwise; " << secs << " s (limit 60)";
    out.push_back({"03_liouvillian_oracle_equivalence", worst <= 1e-6 && secs <= 60.0, worst,
                   1e-6, d3.str()});
  }

  // 4. map vs ODE trajectories, T = 0
  {
    const auto grid = uniform_grid(0.5, kTMax, true);
    double worst = 0.0;
    for (const QubitState& rho0 : {QubitState::excited(), QubitState::plus()}) {
      const auto a = evolve(e0, rho0, grid, Backend::Map);
      const auto b = evolve(e0, rho0, grid, Backend::Ode);
      for (size_t i = 0; i < grid.size(); ++i)
        worst = std::max(worst, trace_distance(a[i], b[i]));
    }
    out.push_back({"04_map_ode_mutual_oracle", worst <= 1e-6, worst, 1e-6,
                   "max trace distance over t in [0,30]"});
  }

  // 5. short-time expansion order of the map
  {
    std::vector<double> lx, ly;
    const Vector v0 = vectorize(QubitState::excited().matrix());
    for (double t = 1e-3; t <= 1.0001e-1; t *= std::pow(100.0, 1.0 / 6.0)) {
      const Matrix Z = sb_exponent(e0.coefficients(t));
      const Matrix R = matrix_exp(Z) - Matrix::Identity(4, 4) - Z;
      lx.push_back(std::log(t));
      ly.push_back(std::log(trace_norm(devectorize(R * v0))));
    }
    const double slope = fit_slope(lx, ly);
    const bool pass = std::abs(slope - 4.0) <= 0.3;
    out.push_back({"05_short_time_order", pass, slope, 4.0, "log-log slope, bound 4 +- 0.3"});
  }

  // 6. Davies limit of the decay coefficient at t = 300
  {
    double worst = 0.0;
    std::ostringstream detail;
    for (const CoefficientEngine* eng : {&e0, &e1}) {
      const double target = 2.0 * M_PI * thermal_weight_plus(eng->bath(), eng->omega0());
      const double got = eng->liouvillian_coefficients(300.0).gamma_mm;
      const double rel = std::abs(got - target) / target;
      worst = std::max(worst, rel);
      detail << "T=" << eng->bath().temperature << ": " << got << " vs " << target << "; ";
    }
    out.push_back({"06_davies_decay_rate", worst <= 0.05, worst, 0.05, detail.str()});
  }

  // 7. diagonal states stay diagonal
  {
    double worst = 0.0;
    const Vector v0 = vectorize(QubitState::excited().matrix());
    for (const auto& eng : engines)
      for (double t : uniform_grid(0.5, kTMax, false)) {
        const Matrix rho = devectorize(dynamical_map(*eng, t) * v0);
        worst = std::max(worst, std::max(std::abs(rho(0, 1)), std::abs(rho(1, 0))));
      }
    out.push_back({"07_incoherent_operation", worst <= 1e-10, worst, 1e-10,
                   "max off-diagonal leakage from a diagonal state"});
  }

  // fine grids for the witness criteria
  const auto fine = uniform_grid(kFineStep, kTMax, false);
  const Series s0 = rate_series(e0, fine, /*with_maps=*/true, threads);
  const Series s1 = rate_series(e1, fine, /*with_maps=*/false, threads);
  const Series s5 = rate_series(e5, fine, /*with_maps=*/false, threads);

  // 8. coherence revival under monotone entanglement, T = 0
  {
    std::vector<double> coh(fine.size()), ln(fine.size());
    for (size_t i = 0; i < fine.size(); ++i) {
      const TwoQubitState ext = ancilla_state(s0.map[i]);
      coh[i] = l1_coherence(ext.matrix());
      ln[i] = log_negativity(ext);
    }
    double best_rise = 0.0;
    for (size_t i = 1; i + 1 < coh.size(); ++i)
      if (coh[i] < coh[i - 1] - 1e-6) {
        const double peak = *std::max_element(coh.begin() + i + 1, coh.end());
        best_rise = std::max(best_rise, peak - coh[i]);
      }
    double worst_increase = 0.0;
    for (size_t i = 0; i + 1 < ln.size(); ++i)
      worst_increase = std::max(worst_increase, ln[i + 1] - ln[i]);
    out.push_back({"08a_coherence_revival", best_rise > 1e-4, best_rise, 1e-4,
                   "largest rise after a local minimum of l1 coherence"});
    out.push_back({"08b_entanglement_monotone", worst_increase <= 1e-6, worst_increase, 1e-6,
                   "largest increase of logarithmic negativity"});
  }

  // 9. quasieternal non-Markovianity at T = 0: lambda_- < 0 on (0, 27]
  {
    size_t neg = 0, total = 0;
    for (size_t i = 0; i < fine.size(); ++i) {
      if (fine[i] > 27.0) break;
      ++total;
      if (canonical_rates(s0.lc[i]).lambda_minus < 0) ++neg;
    }
    const double frac = double(neg) / double(total);
    out.push_back({"09_quasieternal_nonmarkovianity", frac >= 0.80, frac, 0.80,
                   "fraction of grid points in (0,27] with lambda_- < 0"});
  }

  // 10. temperature ordering of the non-Markovian support measure
  {
    auto measure = [&](const Series& s) {
      size_t n = 0;
      for (const auto& lc : s.lc)
        if (g_function(canonical_rates(lc)) > 1e-4) ++n;
      return double(n) * kFineStep;
    };
    const double m0 = measure(s0), m1 = measure(s1), m5 = measure(s5);
    const bool pass = (m0 > m1) && (m1 > m5);
    std::ostringstream detail;
    detail << "measure(g>1e-4) T=0: " << m0 << ", T=1: " << m1 << ", T=5: " << m5;
    out.push_back({"10_temperature_ordering", pass, std::max(m1 - m0, m5 - m1), 0.0,
                   detail.str()});
  }

  // 11. rate-based g vs the finite-eps Choi-derivative evaluation
  {
    double worst = 0.0;
    for (int k = 1; k <= 20; ++k) {
      const double t = 1.5 * k - 0.7;
      const LiouvillianCoefficients lc = e0.liouvillian_coefficients(t);
      const double g_rates = g_function(canonical_rates(lc));
      const double g_choi = g_function_choi(liouvillian_superop(lc), 1e-6);
      worst = std::max(worst, std::abs(g_rates - g_choi));
    }
    out.push_back({"11_g_function_crosscheck", worst <= 1e-4, worst, 1e-4,
                   "max |g_rates - g_choi(eps=1e-6)| at 20 times"});
  }

  // 12. quadrature golden values
  {
    const OhmicBath b(kAlpha, kOmegaC, 0.0);
    auto f = [&](double w) { return spectral_density(b, w); };
    const double ohmic = integrate_semi_infinite(f, make_panel_plan(0.0, 1.0, kOmegaC)).value;
    const double err_ohmic = std::abs(ohmic - kAlpha * kOmegaC * kOmegaC);
    out.push_back({"12a_ohmic_integral", err_ohmic <= 1e-8, err_ohmic, 1e-8,
                   "| int J - alpha w_c^2 |"});

    auto one = [](double) { return 1.0; };
    const double pv = principal_value(one, 0.0, -1.0, 1.0).value;
    out.push_back({"12b_principal_value_odd", std::abs(pv) <= 1e-10, std::abs(pv), 1e-10,
                   "P.V. int_{-1}^{1} dx/x"});

    // int_0^X sinc with X ~ 1e4: average consecutive half-period partial sums
    const double n_half = std::floor(1e4 / M_PI);
    const double x1 = n_half * M_PI, x2 = (n_half + 1) * M_PI;
    QuadratureOptions so;
    so.abs_tol = 1e-12;
    so.rel_tol = 1e-12;
    so.max_splits = 40000;
    std::vector<double> lobes;
    for (double x = 0.0; x < x2 - 0.5 * M_PI; x += M_PI) lobes.push_back(x);
    lobes.push_back(x1);
    lobes.push_back(x2);
    std::sort(lobes.begin(), lobes.end());
    auto fs = [](double x) { return sinc(x); };
    const double to_x1 = integrate_panels(fs, 0.0, x1, so, lobes).value;
    const double last = integrate_panels(fs, x1, x2, so).value;
    const double cesaro = to_x1 + 0.5 * last;  // mean of the two partial sums
    const double err_sinc = std::abs(cesaro - M_PI / 2.0);
    out.push_back({"12c_sinc_integral", err_sinc <= 1e-6, err_sinc, 1e-6,
                   "| averaged partial sums - pi/2 | at X ~ 1e4"});
  }

  return out;
}

}  // namespace rwc
