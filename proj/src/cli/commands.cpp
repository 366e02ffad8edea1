#include "spintherm/cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

#include "spintherm/responses.hpp"
#include "spintherm/thermo.hpp"

namespace spintherm::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view text) {
  text = trim(text);
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError("cannot parse '" + std::string(text) + "' as a number");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const auto next = text.find(sep, pos);
    parts.push_back(text.substr(pos, next - pos));
    if (next == std::string_view::npos) {
      return parts;
    }
    pos = next + 1;
  }
}

Cell num(double v) { return v; }
Cell num(int v) { return static_cast<long long>(v); }

}  // namespace

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  for (auto part : split(text, ',')) {
    part = trim(part);
    if (const auto dots = part.find(".."); dots != std::string_view::npos) {
      const int lo = parse_number<int>(part.substr(0, dots));
      const int hi = parse_number<int>(part.substr(dots + 2));
      if (hi < lo) {
        throw ConfigError("empty range '" + std::string(part) + "'");
      }
      for (int v = lo; v <= hi; ++v) {
        out.push_back(v);
      }
    } else {
      out.push_back(parse_number<int>(part));
    }
  }
  return out;
}

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  for (auto part : split(text, ',')) {
    out.push_back(parse_number<double>(part));
  }
  return out;
}

void TauGrid::validate() const {
  if (count < 2) {
    throw ConfigError("tau grid needs count >= 2, got " + std::to_string(count));
  }
  if (!(start > 0.0) || !(start < stop) || !std::isfinite(stop)) {
    throw ConfigError("tau grid needs 0 < start < stop");
  }
}

std::vector<double> TauGrid::values() const {
  validate();
  std::vector<double> v(static_cast<std::size_t>(count));
  const double last = count - 1;
  for (int i = 0; i < count; ++i) {
    const double t = i / last;
    v[i] = log_spacing ? std::exp(std::log(start) + t * (std::log(stop) - std::log(start)))
                       : start + t * (stop - start);
  }
  v.front() = start;
  v.back() = stop;
  return v;
}

namespace {

// Scenario-wide fields must be valid; a bad d_s only spoils its own rows.
void check_sweep_inputs(const BatteryOptions& o) {
  if (o.d_s.empty() || o.tau_batt.empty()) {
    throw ConfigError("battery: need at least one d_s and one tau_batt value");
  }
  BatterySpec probe = o.base;
  probe.d_s = 0;
  for (double tb : o.tau_batt) {
    probe.tau_E0 = tb;
    probe.tau_s0 = tb;
    try {
      probe.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
}

// Infeasible cells give exit 3. Invalid cells are reported in-row and only
// fail the run (exit 2) when no cell could be solved at all.
int sweep_status(const std::vector<SweepCell>& cells) {
  bool any_solved = false;
  bool any_infeasible = false;
  for (const auto& c : cells) {
    any_solved = any_solved || c.status == CellStatus::Solved;
    any_infeasible = any_infeasible || c.status == CellStatus::Infeasible;
  }
  if (any_infeasible) {
    return kExitInfeasible;
  }
  return any_solved ? kExitOk : kExitConfig;
}

}  // namespace

CommandOutput cmd_battery(const BatteryOptions& options) {
  check_sweep_inputs(options);
  CommandOutput out;
  out.table.columns = {"d_s",       "tau_batt",   "tau_env",    "tau_f",
                       "Q_env",     "Q_batt",     "spin_therm", "W_battery",
                       "eta_energy", "eta_carnot", "eta_endoreversible",
                       "eta_generalized", "residual", "error"};
  const auto cells = sweep_efficiency(options.base, options.d_s, options.tau_batt, options.threads);
  for (const auto& cell : cells) {
    std::vector<Cell> row{num(cell.d_s), num(cell.tau_batt), num(options.base.tau_env)};
    if (cell.result) {
      const auto& r = *cell.result;
      for (double v : {r.tau_f, r.Q_env, r.Q_batt, r.spin_therm, r.W_battery, r.eta_energy,
                       r.eta_carnot, r.eta_endoreversible, r.eta_generalized, r.residual}) {
        row.push_back(v);
      }
      row.emplace_back(std::string{});
    } else {
      row.resize(out.table.columns.size() - 1, Null{});
      row.emplace_back(cell.error);
    }
    out.table.add_row(std::move(row));
  }
  out.status = sweep_status(cells);
  return out;
}

CommandOutput cmd_convergence(const BatteryOptions& options) {
  check_sweep_inputs(options);
  BatterySpec doubled = options.base;
  doubled.d_env *= 2;
  doubled.d_E *= 2;
  const auto coarse = sweep_efficiency(options.base, options.d_s, options.tau_batt, options.threads);
  const auto fine = sweep_efficiency(doubled, options.d_s, options.tau_batt, options.threads);
  CommandOutput out;
  out.table.columns = {"d_s",   "tau_batt", "d_E",         "d_E_doubled", "tau_f",
                       "tau_f_doubled", "eta_energy", "eta_energy_doubled", "eta_shift", "error"};
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    std::vector<Cell> row{num(coarse[i].d_s), num(coarse[i].tau_batt), num(options.base.d_E),
                          num(doubled.d_E)};
    if (coarse[i].result && fine[i].result) {
      const auto& a = *coarse[i].result;
      const auto& b = *fine[i].result;
      for (double v : {a.tau_f, b.tau_f, a.eta_energy, b.eta_energy, b.eta_energy - a.eta_energy}) {
        row.push_back(v);
      }
      row.emplace_back(std::string{});
    } else {
      row.resize(out.table.columns.size() - 1, Null{});
      row.emplace_back(coarse[i].error.empty() ? fine[i].error : coarse[i].error);
    }
    out.table.add_row(std::move(row));
  }
  out.status = std::max(sweep_status(coarse), sweep_status(fine));
  return out;
}

namespace {

ResponseModel make_model(const std::string& name, int states, double cutoff) {
  if (name == "distinguishable" || name == "dist") {
    return DistinguishableModel{states};
  }
  if (name == "boson") {
    return BosonModel{states};
  }
  if (name == "einstein") {
    return EinsteinModel{};
  }
  if (name == "debye") {
    return DebyeModel{cutoff < 0.0 ? static_cast<double>(states - 1) : cutoff};
  }
  throw ConfigError("unknown response model '" + name +
                    "' (expected distinguishable, boson, einstein or debye)");
}

}  // namespace

CommandOutput cmd_response(const ResponseOptions& options) {
  if (options.states < 2) {
    throw ConfigError("response: --states must be >= 2");
  }
  std::vector<ResponseModel> models;
  for (const auto& name : options.models) {
    models.push_back(make_model(name, options.states, options.cutoff));
  }
  CommandOutput out;
  out.table.columns = {"model", "tau", "C_s", "C_s_over_tau"};
  for (std::size_t m = 0; m < models.size(); ++m) {
    for (double tau : options.tau) {
      const double c = waste_response(models[m], tau);
      out.table.add_row({options.models[m], tau, c, c / tau});
    }
  }
  return out;
}

CommandOutput cmd_entropy(const EntropyOptions& options) {
  const EnsembleSpec spec(options.statistics, options.particles, Spin::from_states(options.states));
  const bool boson = options.statistics == Statistics::Boson;
  CommandOutput out;
  out.table.columns = {"tau", "entropy", "heat"};
  if (boson) {
    out.table.columns.emplace_back("entropy_limit");
    out.table.columns.emplace_back("heat_limit");
  }
  for (double tau : options.tau) {
    const ThermalPoint point{spec, InverseTemperature::from_tau(tau)};
    std::vector<Cell> row{tau, entropy(point), finite_heat(point)};
    if (boson && spec.states() >= 2) {
      row.emplace_back(boson_entropy_analytic(spec.states(), tau));
      row.emplace_back(boson_heat(spec.states(), tau));
    } else if (boson) {
      row.emplace_back(0.0);
      row.emplace_back(0.0);
    }
    out.table.add_row(std::move(row));
  }
  return out;
}

CommandOutput cmd_polarization(const PolarizationOptions& options) {
  for (double a : options.alphas) {
    if (!(a > 0.0 && a < 1.0)) {
      throw ConfigError("polarization: alpha must lie in (0, 1), got " + format_double(a));
    }
  }
  CommandOutput out;
  out.table.columns = {"S", "alpha", "tau", "tau_infinite"};
  for (double s : options.spins) {
    const Spin spin = Spin::from_value(s);
    for (double a : options.alphas) {
      const auto gamma = polarization_to_tau(Polarization(a), spin);
      const auto tau = gamma.tau();
      out.table.add_row({s, a, tau ? *tau : std::numeric_limits<double>::infinity(),
                         !tau.has_value()});
    }
  }
  return out;
}

}  // namespace spintherm::cli
