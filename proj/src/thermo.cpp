#include "spintherm/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "spintherm/numeric.hpp"

namespace spintherm {

namespace {

void check_boson_args(int states, double tau, const char* where) {
  if (states < 2) {
    throw std::invalid_argument(std::string(where) + ": requires d >= 2");
  }
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw std::domain_error(std::string(where) + ": requires finite tau > 0");
  }
}

}  // namespace

double boson_entropy_analytic(int states, double tau) {
  check_boson_args(states, tau, "boson_entropy_analytic");
  // With x = j/tau each bracket reduces to x/(e^x - 1) - ln(1 - e^{-x}).
  double s = 0.0;
  for (int j = 1; j < states; ++j) {
    const double x = j / tau;
    if (0.5 * x > numeric::kSinhCutoff) {
      break;
    }
    s += x * numeric::bose_factor(x) - numeric::log1mexp(x);
  }
  return s;
}

double boson_heat(int states, double tau) {
  check_boson_args(states, tau, "boson_heat");
  // (1/2) j (coth(x/2) - 1) = j / (e^x - 1)
  double q = 0.0;
  for (int j = 1; j < states; ++j) {
    const double x = j / tau;
    if (0.5 * x > numeric::kSinhCutoff) {
      break;
    }
    q += j * numeric::bose_factor(x);
  }
  return q;
}

double heat_between(int states, double tau_a, double tau_b) {
  return boson_heat(states, tau_b) - boson_heat(states, tau_a);
}

double finite_heat(const ThermalPoint& point) {
  const auto& spec = point.spec;
  double ground = 0.0;
  if (spec.statistics() == Statistics::Fermion) {
    ground = 0.5 * spec.particles() * (spec.particles() - 1.0);
  }
  return mean_macrostate(point) - ground;
}

double entropy_capacity(Statistics statistics, int particles, int states) {
  if (particles < 1 || states < 1) {
    throw std::invalid_argument("entropy_capacity: requires N >= 1 and d >= 1");
  }
  const double n = particles;
  double s = 0.0;
  switch (statistics) {
    case Statistics::Distinguishable:
      s = n * std::log(static_cast<double>(states));
      break;
    case Statistics::Boson:
      for (int i = 1; i < states; ++i) {
        s += std::log1p(n / i);
      }
      break;
    case Statistics::Fermion:
      if (particles > states) {
        throw std::invalid_argument("entropy_capacity: " + std::to_string(particles) +
                                    " fermions cannot occupy " + std::to_string(states) +
                                    " states");
      }
      for (int i = 1; i <= particles; ++i) {
        s += std::log(static_cast<double>(states - particles + i) / i);
      }
      break;
  }
  return s;
}

double waste_capacity(int particles, Spin spin) {
  if (particles < 1) {
    throw std::invalid_argument("waste_capacity: requires N >= 1");
  }
  return spin.value() * particles;
}

CapacityReport capacity_report(const EnsembleSpec& spec) {
  return {entropy_capacity(spec.statistics(), spec.particles(), spec.states()),
          waste_capacity(spec.particles(), spec.spin())};
}

Polarization::Polarization(double alpha) : alpha_(alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("Polarization: alpha must lie in [0, 1], got " +
                                std::to_string(alpha));
  }
}

namespace {

// sum_j c_j x^j, rescaled by x^{-(d-1)} when x > 1 so nothing overflows; the
// sign is all the root finder needs.
double signed_polynomial(const std::vector<double>& c, double x) {
  double acc = 0.0;
  if (x <= 1.0) {
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      acc = acc * x + *it;
    }
  } else {
    const double y = 1.0 / x;
    for (double cj : c) {
      acc = acc * y + cj;
    }
  }
  return acc;
}

}  // namespace

InverseTemperature polarization_to_tau(Polarization alpha, Spin spin) {
  const double a = alpha.alpha();
  if (a == 0.5) {
    return InverseTemperature::infinite_temperature();
  }
  if (spin.twice() == 0) {
    throw std::domain_error("polarization_to_tau: a spin-0 particle only has alpha = 1/2");
  }
  if (a == 0.0 || a == 1.0) {
    throw std::domain_error("polarization_to_tau: alpha in {0, 1} is the tau -> 0 limit");
  }
  const double target = a * spin.twice();
  std::vector<double> c(static_cast<std::size_t>(spin.states()));
  for (std::size_t j = 0; j < c.size(); ++j) {
    c[j] = target - static_cast<double>(j);
  }
  // c_0 > 0 > c_{2S} and the coefficients change sign once, so there is
  // exactly one positive root, with p > 0 to its left.
  double lo = 1.0;
  double hi = 1.0;
  if (signed_polynomial(c, 1.0) > 0.0) {
    do {
      lo = hi;
      hi *= 2.0;
      if (!std::isfinite(hi)) {
        throw std::domain_error("polarization_to_tau: root bracket overflowed");
      }
    } while (signed_polynomial(c, hi) > 0.0);
  } else {
    do {
      hi = lo;
      lo *= 0.5;
      if (lo == 0.0) {
        throw std::domain_error("polarization_to_tau: root bracket underflowed");
      }
    } while (signed_polynomial(c, lo) <= 0.0);
  }
  // Bisect down to adjacent doubles.
  for (int iter = 0; iter < 2000; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) {
      break;
    }
    if (signed_polynomial(c, mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return InverseTemperature(-std::log(0.5 * (lo + hi)));
}

Polarization tau_to_polarization(InverseTemperature gamma, Spin spin) {
  if (spin.twice() == 0) {
    return Polarization(0.5);
  }
  const EnsembleSpec single(Statistics::Distinguishable, 1, spin);
  const double jz = average_spin({single, gamma});
  const double alpha = 0.5 * (jz / spin.value() + 1.0);
  return Polarization(std::clamp(alpha, 0.0, 1.0));
}

Polarization tau_to_polarization(double tau, Spin spin) {
  return tau_to_polarization(InverseTemperature::from_tau(tau), spin);
}

}  // namespace spintherm
