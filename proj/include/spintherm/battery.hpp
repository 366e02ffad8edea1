#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace spintherm {

/// One entropy-battery scenario. The battery is an energy bath (d_E modes)
/// plus an optional spin bath (d_s states, 0 disables it) placed in contact
/// with a hotter environment bath (d_env modes). Weights scale the
/// per-particle quantities of each bath.
struct BatterySpec {
  double tau_env = 0.6;
  double tau_E0 = 0.3;
  double tau_s0 = 0.3;
  int d_env = 400;
  int d_E = 400;
  int d_s = 0;
  double weight_env = 1.0;
  double weight_E = 1.0;
  double weight_s = 1.0;

  [[nodiscard]] bool has_spin_bath() const noexcept { return d_s != 0; }

  /// Throws std::invalid_argument on malformed fields (non-positive
  /// temperatures or weights, d_env or d_E < 2, d_s < 0 or d_s == 1).
  /// Temperature ordering is not checked here; solve_equilibrium reports it
  /// as InfeasibleError.
  void validate() const;
};

struct EquilibriumResult {
  double tau_f = 0.0;
  // Magnitudes of the weighted heats.
  double Q_env = 0.0;
  double Q_batt = 0.0;
  double spin_therm = 0.0;
  double W_conventional = 0.0;
  double W_battery = 0.0;
  double spin_labor = 0.0;
  double generalized_work = 0.0;
  double eta_energy = 0.0;
  double eta_carnot = 0.0;
  double eta_endoreversible = 0.0;
  double eta_generalized = 0.0;
  double residual = 0.0;
  int iterations = 0;
};

/// Weighted entropy change of all baths when each relaxes to tau_f, using the
/// infinite-N boson entropy per bath. Strictly increasing in tau_f.
double total_entropy_change(const BatterySpec& spec, double tau_f);

inline constexpr double kEntropyTolerance = 1e-10;
inline constexpr double kTauTolerance = 1e-12;
inline constexpr int kMaxBisections = 200;

/// Bisection for the common final temperature on [min(tau_E0, tau_s0), tau_env].
/// Throws std::invalid_argument for a malformed spec and InfeasibleError when
/// the environment is colder than the battery or the residual stays above
/// kEntropyTolerance.
EquilibriumResult solve_equilibrium(const BatterySpec& spec);

enum class CellStatus { Solved, InvalidSpec, Infeasible };

struct SweepCell {
  int d_s;
  double tau_batt;
  CellStatus status = CellStatus::Solved;
  std::optional<EquilibriumResult> result;
  std::string error;  ///< empty on success
};

/// One cell per (d_s, tau_batt) pair, row-major with d_s outermost. Each cell
/// uses base with tau_E0 = tau_s0 = tau_batt. Failing cells carry the error
/// message and do not stop the sweep. Cells run on up to `threads` workers
/// (0 = hardware concurrency, further capped by SPINTHERM_THREADS); output
/// order never depends on scheduling.
std::vector<SweepCell> sweep_efficiency(const BatterySpec& base, std::span<const int> d_s_values,
                                        std::span<const double> tau_batt_values,
                                        unsigned threads = 0);

struct EndoreversiblePoint {
  double tau_f;
  double eta;
};

/// tau_f = sqrt(tau_batt tau_env), eta = 1 - sqrt(tau_batt / tau_env).
/// Requires 0 < tau_batt <= tau_env.
EndoreversiblePoint endoreversible_reference(double tau_batt, double tau_env);

}  // namespace spintherm
