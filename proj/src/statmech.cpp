#include "spintherm/statmech.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "spintherm/combinatorics.hpp"
#include "spintherm/errors.hpp"
#include "spintherm/numeric.hpp"

namespace spintherm {

std::string_view to_string(Statistics s) {
  switch (s) {
    case Statistics::Distinguishable:
      return "distinguishable";
    case Statistics::Boson:
      return "boson";
    case Statistics::Fermion:
      return "fermion";
  }
  return "unknown";
}

Statistics parse_statistics(std::string_view name) {
  if (name == "distinguishable" || name == "dist") {
    return Statistics::Distinguishable;
  }
  if (name == "boson") {
    return Statistics::Boson;
  }
  if (name == "fermion") {
    return Statistics::Fermion;
  }
  throw std::invalid_argument("unknown statistics '" + std::string(name) + "'");
}

Spin Spin::from_twice(int twice_spin) {
  if (twice_spin < 0) {
    throw std::invalid_argument("Spin: 2S must be non-negative");
  }
  return Spin(twice_spin);
}

Spin Spin::from_states(int states) {
  if (states < 1) {
    throw std::invalid_argument("Spin: state count must be >= 1");
  }
  return Spin(states - 1);
}

Spin Spin::from_value(double value) {
  const double twice = 2.0 * value;
  if (!(twice >= 0.0) || twice != std::round(twice) || twice > 1e9) {
    throw std::invalid_argument("Spin: " + std::to_string(value) +
                                " is not a non-negative half-integer");
  }
  return Spin(static_cast<int>(twice));
}

EnsembleSpec::EnsembleSpec(Statistics statistics, int particles, Spin spin)
    : statistics_(statistics), particles_(particles), spin_(spin) {
  if (particles < 1) {
    throw std::invalid_argument("EnsembleSpec: particle count must be >= 1");
  }
  if (statistics == Statistics::Fermion && particles > spin.states()) {
    throw std::invalid_argument("EnsembleSpec: " + std::to_string(particles) +
                                " fermions cannot occupy " + std::to_string(spin.states()) +
                                " states");
  }
}

EnsembleSpec EnsembleSpec::with_states(Statistics statistics, int particles, int states) {
  return EnsembleSpec(statistics, particles, Spin::from_states(states));
}

InverseTemperature::InverseTemperature(double gamma) : gamma_(gamma) {
  if (!std::isfinite(gamma)) {
    throw std::domain_error("InverseTemperature: gamma must be finite");
  }
}

InverseTemperature InverseTemperature::from_tau(double tau) {
  if (std::isnan(tau) || tau == 0.0) {
    throw std::domain_error("InverseTemperature: tau = 0 is only reachable as a limit");
  }
  if (std::isinf(tau)) {
    return infinite_temperature();
  }
  return InverseTemperature(1.0 / tau);
}

std::optional<double> InverseTemperature::tau() const {
  if (gamma_ == 0.0) {
    return std::nullopt;
  }
  return 1.0 / gamma_;
}

namespace {

struct Moments {
  double log_z = 0.0;
  double mean = 0.0;
  double variance = 0.0;
  double entropy = 0.0;
};

// Below this |gamma| the boson product form is replaced by its series.
constexpr double kSmallGamma = 1e-8;

Moments distinguishable_moments(int particles, int states, double gamma) {
  // Single-particle sums; every weight e^{-gamma j} <= 1.
  double tail = 0.0;
  double first = 0.0;
  for (int j = 1; j < states; ++j) {
    const double w = std::exp(-gamma * j);
    tail += w;
    first += j * w;
  }
  const double z1 = 1.0 + tail;
  const double mean1 = first / z1;
  double var1 = mean1 * mean1 / z1;  // j = 0 term
  for (int j = 1; j < states; ++j) {
    const double dj = j - mean1;
    var1 += dj * dj * std::exp(-gamma * j) / z1;
  }
  Moments m;
  m.log_z = particles * std::log1p(tail);
  m.mean = particles * mean1;
  m.variance = particles * var1;
  m.entropy = particles * (std::log1p(tail) + gamma * mean1);
  return m;
}

// ln Z = sum_{i=1}^{d-1} [ln(1 - q^{N+i}) - ln(1 - q^i)], q = e^{-gamma}.
Moments boson_moments(int particles, int states, double gamma) {
  using namespace numeric;
  Moments m;
  const double n = particles;
  if (gamma < kSmallGamma) {
    for (int i = 1; i < states; ++i) {
      const double a = i;
      const double b = n + i;
      const double spread = b * b - a * a;
      m.log_z += std::log1p(n / a) - 0.5 * n * gamma + spread * gamma * gamma / 24.0;
      m.mean += 0.5 * n - spread * gamma / 12.0;
      m.variance += spread / 12.0;
    }
    m.entropy = m.log_z + gamma * m.mean;
    return m;
  }
  const double g2 = gamma * gamma;
  for (int i = 1; i < states; ++i) {
    const double a = i;
    const double b = n + i;
    const double xa = a * gamma;
    const double xb = b * gamma;
    if (xa < 1.0) {
      // Pole-free forms: the 1/x and ln x singular parts cancel analytically.
      m.log_z += std::log1p(n / a) + log1mexp_over_x(xb) - log1mexp_over_x(xa);
      m.mean += a * bose_factor_minus_pole(xa) - b * bose_factor_minus_pole(xb);
      m.variance += (einstein_complement(xb) - einstein_complement(xa)) / g2;
    } else {
      m.log_z += log1mexp(xb) - log1mexp(xa);
      m.mean += a * bose_factor(xa) - b * bose_factor(xb);
      m.variance += (einstein_function(xa) - einstein_function(xb)) / g2;
    }
  }
  m.entropy = m.log_z + gamma * m.mean;
  return m;
}

Moments fermion_moments(int particles, int states, double gamma) {
  if (static_cast<long>(particles) * states > kFermionCapacity) {
    throw CapacityError("fermion partition function: N*d = " +
                        std::to_string(static_cast<long>(particles) * states) +
                        " exceeds the exact-extraction limit " + std::to_string(kFermionCapacity));
  }
  const std::vector<double> g = fermion_multiplicities(particles, states).to_doubles();
  // Weights are taken relative to the ground macrostate m0 = N(N-1)/2 so that
  // the entropy near tau -> 0 is a sum of small positive terms.
  const long ground = static_cast<long>(particles) * (particles - 1) / 2;
  double z = 0.0;
  double excess = 0.0;
  for (std::size_t k = static_cast<std::size_t>(ground); k < g.size(); ++k) {
    if (g[k] == 0.0) {
      continue;
    }
    const double dm = static_cast<double>(k) - ground;
    const double w = g[k] * std::exp(-gamma * dm);
    z += w;
    excess += dm * w;
  }
  excess /= z;
  double var = 0.0;
  for (std::size_t k = static_cast<std::size_t>(ground); k < g.size(); ++k) {
    if (g[k] == 0.0) {
      continue;
    }
    const double dm = static_cast<double>(k) - ground;
    const double dev = dm - excess;
    var += dev * dev * g[k] * std::exp(-gamma * dm) / z;
  }
  Moments m;
  m.log_z = -gamma * ground + std::log(z);
  m.mean = ground + excess;
  m.variance = var;
  m.entropy = std::log(z) + gamma * excess;
  return m;
}

Moments moments(const ThermalPoint& point) {
  const auto& spec = point.spec;
  const double gamma = point.gamma.value();
  const double g = std::abs(gamma);
  Moments m;
  switch (spec.statistics()) {
    case Statistics::Distinguishable:
      m = distinguishable_moments(spec.particles(), spec.states(), g);
      break;
    case Statistics::Boson:
      m = boson_moments(spec.particles(), spec.states(), g);
      break;
    case Statistics::Fermion:
      m = fermion_moments(spec.particles(), spec.states(), g);
      break;
  }
  if (gamma < 0.0) {
    // Spectrum reflection j -> (d-1) - j maps Z(gamma) to e^{-gamma M} Z(-gamma).
    const double top = static_cast<double>(spec.max_macrostate());
    m.log_z += g * top;
    m.mean = top - m.mean;
  }
  return m;
}

}  // namespace

double log_partition(const ThermalPoint& point) { return moments(point).log_z; }

double mean_macrostate(const ThermalPoint& point) { return moments(point).mean; }

double macrostate_variance(const ThermalPoint& point) { return moments(point).variance; }

double average_spin(const ThermalPoint& point) {
  return moments(point).mean - point.spec.spin_shift();
}

double entropy(const ThermalPoint& point) { return moments(point).entropy; }

double probability(const ThermalPoint& point, std::span<const int> occupation,
                   ProbabilityConvention convention) {
  const auto& spec = point.spec;
  if (occupation.size() != static_cast<std::size_t>(spec.states())) {
    throw std::invalid_argument("probability: occupation vector has " +
                                std::to_string(occupation.size()) + " entries, expected " +
                                std::to_string(spec.states()));
  }
  long total = 0;
  long macro = 0;
  for (std::size_t j = 0; j < occupation.size(); ++j) {
    const int k = occupation[j];
    if (k < 0) {
      throw std::invalid_argument("probability: negative occupation");
    }
    if (spec.statistics() == Statistics::Fermion && k > 1) {
      throw std::invalid_argument("probability: fermion occupations must be 0 or 1");
    }
    total += k;
    macro += static_cast<long>(j) * k;
  }
  if (total != spec.particles()) {
    throw std::invalid_argument("probability: occupations sum to " + std::to_string(total) +
                                ", expected " + std::to_string(spec.particles()));
  }
  double log_p = -point.gamma.value() * static_cast<double>(macro) - log_partition(point);
  if (spec.statistics() == Statistics::Distinguishable &&
      convention == ProbabilityConvention::Macrostate) {
    log_p += std::lgamma(spec.particles() + 1.0);
    for (int k : occupation) {
      log_p -= std::lgamma(k + 1.0);
    }
  }
  return std::exp(log_p);
}

namespace {

double spin_gap(int state, Spin spin, double tau) {
  if (state < 0 || state >= spin.states()) {
    throw std::invalid_argument("occupation: state index " + std::to_string(state) +
                                " outside [0, 2S]");
  }
  if (tau == 0.0 || std::isnan(tau)) {
    throw std::domain_error("occupation: tau must be non-zero");
  }
  return (state - spin.value()) / tau;
}

}  // namespace

double occupation_bose(int state, Spin spin, double tau) {
  const double x = spin_gap(state, spin, tau);
  if (!(x > 0.0)) {
    throw std::domain_error("occupation_bose: requires (j - S)/tau > 0 for a convergent "
                            "geometric series, got " + std::to_string(x));
  }
  return numeric::bose_factor(x);
}

double occupation_fermi(int state, Spin spin, double tau) {
  const double x = spin_gap(state, spin, tau);
  if (x > 0.0) {
    const double e = std::exp(-x);
    return e / (1.0 + e);
  }
  return 1.0 / (1.0 + std::exp(x));
}

}  // namespace spintherm
