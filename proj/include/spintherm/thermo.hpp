#pragma once

#include "spintherm/statmech.hpp"

namespace spintherm {

/// Infinite-N boson entropy per particle,
/// sum_{j=1}^{d-1} [(j/2tau) coth(j/2tau) - ln sinh(j/2tau)] - (d-1) ln 2.
/// Terms with j/2tau > 350 are exactly zero.
double boson_entropy_analytic(int states, double tau);

/// Infinite-N boson heat per particle relative to the tau -> 0 ground state,
/// (1/2) sum_{j=1}^{d-1} j (coth(j/2tau) - 1).
double boson_heat(int states, double tau);

/// boson_heat(d, tau_b) - boson_heat(d, tau_a). Positive when heat is absorbed
/// going from tau_a to tau_b.
double heat_between(int states, double tau_a, double tau_b);

/// Finite-N heat <j> - j_ground at the given point; j_ground is 0 except for
/// fermions, where it is N(N-1)/2. Saturates at S*N as tau -> inf.
double finite_heat(const ThermalPoint& point);

/// ln of the total microstate count: N ln d, ln C(N+d-1, d-1) or ln C(d, N).
double entropy_capacity(Statistics statistics, int particles, int states);

/// Q_max = S*N.
double waste_capacity(int particles, Spin spin);

struct CapacityReport {
  double entropy_capacity;
  double waste_capacity;
};

CapacityReport capacity_report(const EnsembleSpec& spec);

/// Fraction alpha in [0, 1] with <Jz> = (2 alpha - 1) S N.
class Polarization {
 public:
  /// Throws std::invalid_argument outside [0, 1].
  explicit Polarization(double alpha);
  [[nodiscard]] double alpha() const noexcept { return alpha_; }

 private:
  double alpha_;
};

/// Spin temperature of a single spin-S particle with polarization alpha,
/// gamma = -ln x where x is the positive root of sum_{j=0}^{2S} x^j (2 alpha S - j).
/// alpha = 1/2 returns the infinite-temperature value gamma = 0. alpha in {0, 1}
/// throws std::domain_error (tau -> 0 limit).
InverseTemperature polarization_to_tau(Polarization alpha, Spin spin);

/// Inverse of polarization_to_tau via the single-particle Boltzmann average.
/// S = 0 returns 1/2.
Polarization tau_to_polarization(InverseTemperature gamma, Spin spin);
/// Throws std::domain_error for tau == 0.
Polarization tau_to_polarization(double tau, Spin spin);

}  // namespace spintherm
