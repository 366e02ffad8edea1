#pragma once

#include <optional>
#include <span>
#include <string_view>

namespace spintherm {

enum class Statistics { Distinguishable, Boson, Fermion };

std::string_view to_string(Statistics s);
/// Accepts "distinguishable", "boson", "fermion" (also "dist").
Statistics parse_statistics(std::string_view name);

/// Per-particle spin S, a non-negative half-integer, stored as 2S.
class Spin {
 public:
  constexpr Spin() = default;
  static Spin from_twice(int twice_spin);
  static Spin from_states(int states);
  /// Throws std::invalid_argument unless 2*value is a non-negative integer.
  static Spin from_value(double value);

  [[nodiscard]] constexpr int twice() const noexcept { return twice_; }
  [[nodiscard]] constexpr int states() const noexcept { return twice_ + 1; }
  [[nodiscard]] constexpr double value() const noexcept { return 0.5 * twice_; }

  friend constexpr bool operator==(Spin, Spin) = default;

 private:
  constexpr explicit Spin(int twice) : twice_(twice) {}
  int twice_ = 0;
};

/// N particles with d = 2S+1 spin states each and a given exchange symmetry.
class EnsembleSpec {
 public:
  /// Throws std::invalid_argument for N < 1, or fermions with N > d.
  EnsembleSpec(Statistics statistics, int particles, Spin spin);
  static EnsembleSpec with_states(Statistics statistics, int particles, int states);

  [[nodiscard]] Statistics statistics() const noexcept { return statistics_; }
  [[nodiscard]] int particles() const noexcept { return particles_; }
  [[nodiscard]] Spin spin() const noexcept { return spin_; }
  [[nodiscard]] int states() const noexcept { return spin_.states(); }
  /// Largest computational macrostate, (d-1)*N.
  [[nodiscard]] long max_macrostate() const noexcept {
    return static_cast<long>(states() - 1) * particles_;
  }
  /// S*N, the shift between computational and physical spin.
  [[nodiscard]] double spin_shift() const noexcept { return spin_.value() * particles_; }

 private:
  Statistics statistics_;
  int particles_;
  Spin spin_;
};

/// gamma = 1/tau. Zero encodes infinite temperature; negative values are
/// inverted populations. Always finite.
class InverseTemperature {
 public:
  constexpr InverseTemperature() = default;
  /// Throws std::domain_error if gamma is not finite.
  explicit InverseTemperature(double gamma);
  /// Throws std::domain_error for tau == 0 or NaN; tau = +-inf gives gamma = 0.
  static InverseTemperature from_tau(double tau);
  static constexpr InverseTemperature infinite_temperature() { return InverseTemperature{}; }

  [[nodiscard]] constexpr double value() const noexcept { return gamma_; }
  [[nodiscard]] constexpr bool is_infinite_temperature() const noexcept { return gamma_ == 0.0; }
  /// tau = 1/gamma, or nullopt at infinite temperature.
  [[nodiscard]] std::optional<double> tau() const;

 private:
  double gamma_ = 0.0;
};

struct ThermalPoint {
  EnsembleSpec spec;
  InverseTemperature gamma;
};

/// Fermion coefficient extraction refuses N*d above this.
inline constexpr long kFermionCapacity = 10'000;

/// ln Z in the computational basis (Boltzmann weights e^{-gamma j}).
double log_partition(const ThermalPoint& point);

/// <j>, the mean computational macrostate (total over particles).
double mean_macrostate(const ThermalPoint& point);

/// Var(j) of the total macrostate, i.e. -d<j>/dgamma.
double macrostate_variance(const ThermalPoint& point);

/// <Jz> = <j> - S*N in units of hbar.
double average_spin(const ThermalPoint& point);

/// S = ln Z + gamma <Jz>; identical in the computational and physical basis.
double entropy(const ThermalPoint& point);

enum class ProbabilityConvention {
  Macrostate,  ///< includes the multinomial multiplicity (distinguishable only)
  Microstate,  ///< one labelled assignment of particles
};

/// Probability of the occupation vector k (sum k = N, length d).
double probability(const ThermalPoint& point, std::span<const int> occupation,
                   ProbabilityConvention convention = ProbabilityConvention::Macrostate);

/// Bose-Einstein mean occupation 1 / (e^{(j-S)/tau} - 1). Requires
/// (j-S)/tau > 0, otherwise std::domain_error.
double occupation_bose(int state, Spin spin, double tau);

/// Fermi-Dirac mean occupation 1 / (e^{(j-S)/tau} + 1). Requires tau != 0.
double occupation_fermi(int state, Spin spin, double tau);

}  // namespace spintherm
