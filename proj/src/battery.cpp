#include "spintherm/battery.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <thread>

#include "spintherm/errors.hpp"
#include "spintherm/thermo.hpp"

namespace spintherm {

void BatterySpec::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument(std::string("BatterySpec: ") + name + " must be finite and > 0");
    }
  };
  positive(tau_env, "tau_env");
  positive(tau_E0, "tau_E0");
  positive(tau_s0, "tau_s0");
  positive(weight_env, "weight_env");
  positive(weight_E, "weight_E");
  positive(weight_s, "weight_s");
  if (d_env < 2 || d_E < 2) {
    throw std::invalid_argument("BatterySpec: d_env and d_E must be >= 2");
  }
  if (d_s < 0 || d_s == 1) {
    throw std::invalid_argument("BatterySpec: d_s must be 0 (no spin bath) or >= 2, got " +
                                std::to_string(d_s));
  }
}

double total_entropy_change(const BatterySpec& spec, double tau_f) {
  double ds = spec.weight_env * (boson_entropy_analytic(spec.d_env, tau_f) -
                                 boson_entropy_analytic(spec.d_env, spec.tau_env));
  ds += spec.weight_E *
        (boson_entropy_analytic(spec.d_E, tau_f) - boson_entropy_analytic(spec.d_E, spec.tau_E0));
  if (spec.has_spin_bath()) {
    ds += spec.weight_s *
          (boson_entropy_analytic(spec.d_s, tau_f) - boson_entropy_analytic(spec.d_s, spec.tau_s0));
  }
  return ds;
}

namespace {

void fill_energetics(const BatterySpec& spec, EquilibriumResult& r) {
  const double tf = r.tau_f;
  r.Q_env = spec.weight_env * std::abs(heat_between(spec.d_env, tf, spec.tau_env));
  r.Q_batt = spec.weight_E * std::abs(heat_between(spec.d_E, spec.tau_E0, tf));
  r.spin_therm =
      spec.has_spin_bath() ? spec.weight_s * std::abs(heat_between(spec.d_s, spec.tau_s0, tf)) : 0.0;
  r.W_conventional = r.Q_env - r.Q_batt;
  r.W_battery = r.Q_env - r.Q_batt + r.spin_therm;
  r.spin_labor = r.spin_therm;
  r.generalized_work = r.W_battery - r.spin_labor;
  r.eta_carnot = 1.0 - spec.tau_E0 / spec.tau_env;
  r.eta_endoreversible = 1.0 - std::sqrt(spec.tau_E0 / spec.tau_env);
  // With no heat drawn there is no cycle; report zero rather than 0/0.
  if (r.Q_env > 0.0) {
    r.eta_energy = r.W_battery / r.Q_env;
    r.eta_generalized = 1.0 - r.Q_batt / r.Q_env;
  }
}

}  // namespace

EquilibriumResult solve_equilibrium(const BatterySpec& spec) {
  spec.validate();
  const double coldest = spec.has_spin_bath() ? std::min(spec.tau_E0, spec.tau_s0) : spec.tau_E0;
  const double warmest = spec.has_spin_bath() ? std::max(spec.tau_E0, spec.tau_s0) : spec.tau_E0;
  if (spec.tau_env < warmest) {
    throw InfeasibleError("solve_equilibrium: the environment (tau_env = " +
                          std::to_string(spec.tau_env) +
                          ") must be at least as hot as the battery (max initial tau = " +
                          std::to_string(warmest) + ")");
  }

  EquilibriumResult r;
  double lo = coldest;
  double hi = spec.tau_env;
  double f_lo = total_entropy_change(spec, lo);
  double f_hi = total_entropy_change(spec, hi);
  if (f_lo > kEntropyTolerance || f_hi < -kEntropyTolerance) {
    throw InfeasibleError("solve_equilibrium: entropy change does not bracket zero on [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  while (hi - lo > kTauTolerance && r.iterations < kMaxBisections) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) {
      break;
    }
    const double f_mid = total_entropy_change(spec, mid);
    ++r.iterations;
    if (f_mid == 0.0) {
      lo = hi = mid;
      f_lo = f_hi = 0.0;
      break;
    }
    if (f_mid < 0.0) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
      f_hi = f_mid;
    }
  }
  if (std::abs(f_lo) <= std::abs(f_hi)) {
    r.tau_f = lo;
    r.residual = std::abs(f_lo);
  } else {
    r.tau_f = hi;
    r.residual = std::abs(f_hi);
  }
  if (r.residual > kEntropyTolerance) {
    throw InfeasibleError("solve_equilibrium: residual " + std::to_string(r.residual) +
                          " above tolerance after " + std::to_string(r.iterations) +
                          " bisections");
  }
  fill_energetics(spec, r);
  return r;
}

namespace {

unsigned resolve_threads(unsigned requested, std::size_t cells) {
  unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("SPINTHERM_THREADS"); env != nullptr && *env != '\0') {
    unsigned cap = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, cap);
    if (ec == std::errc() && ptr == end && cap > 0) {
      n = std::min(n, cap);
    }
  }
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(cells, 1)));
}

}  // namespace

std::vector<SweepCell> sweep_efficiency(const BatterySpec& base, std::span<const int> d_s_values,
                                        std::span<const double> tau_batt_values,
                                        unsigned threads) {
  std::vector<SweepCell> cells;
  cells.reserve(d_s_values.size() * tau_batt_values.size());
  for (int ds : d_s_values) {
    for (double tb : tau_batt_values) {
      cells.push_back({ds, tb, CellStatus::Solved, std::nullopt, {}});
    }
  }

  auto solve_cell = [&base](SweepCell& cell) {
    BatterySpec spec = base;
    spec.d_s = cell.d_s;
    spec.tau_E0 = cell.tau_batt;
    spec.tau_s0 = cell.tau_batt;
    try {
      cell.result = solve_equilibrium(spec);
    } catch (const std::invalid_argument& e) {
      cell.status = CellStatus::InvalidSpec;
      cell.error = e.what();
    } catch (const std::exception& e) {
      cell.status = CellStatus::Infeasible;
      cell.error = e.what();
    }
  };

  const unsigned workers = resolve_threads(threads, cells.size());
  if (workers <= 1) {
    for (auto& cell : cells) {
      solve_cell(cell);
    }
    return cells;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < cells.size(); i = next++) {
        solve_cell(cells[i]);
      }
    });
  }
  for (auto& th : pool) {
    th.join();
  }
  return cells;
}

EndoreversiblePoint endoreversible_reference(double tau_batt, double tau_env) {
  if (!(tau_batt > 0.0) || !(tau_env >= tau_batt) || !std::isfinite(tau_env)) {
    throw std::invalid_argument("endoreversible_reference: requires 0 < tau_batt <= tau_env");
  }
  return {std::sqrt(tau_batt * tau_env), 1.0 - std::sqrt(tau_batt / tau_env)};
}

}  // namespace spintherm
