#include "spintherm/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "spintherm/errors.hpp"

namespace spintherm::oracle {

BigInt MicrostateEnumeration::total_multiplicity() const {
  BigInt total = 0;
  for (const auto& e : entries) {
    total += e.multiplicity;
  }
  return total;
}

namespace {

void fill(const EnsembleSpec& spec, std::vector<int>& k, std::size_t state, int left,
          std::vector<Configuration>& out) {
  const int cap = spec.statistics() == Statistics::Fermion ? 1 : left;
  if (state + 1 == k.size()) {
    if (left > cap) {
      return;
    }
    k[state] = left;
    long m = 0;
    for (std::size_t j = 0; j < k.size(); ++j) {
      m += static_cast<long>(j) * k[j];
    }
    BigInt g = spec.statistics() == Statistics::Distinguishable
                   ? multinomial(spec.particles(), k)
                   : BigInt(1);
    out.push_back({k, std::move(g), m});
    return;
  }
  for (int n = std::min(cap, left); n >= 0; --n) {
    k[state] = n;
    fill(spec, k, state + 1, left - n, out);
  }
}

struct Sums {
  double z = 0.0;
  double first = 0.0;  // sum w m
  double shannon = 0.0;
};

Sums sums(const EnsembleSpec& spec, double gamma) {
  const auto e = enumerate_microstates(spec);
  Sums s;
  for (const auto& c : e.entries) {
    const double g = c.multiplicity.convert_to<double>();
    const double w = std::exp(-gamma * static_cast<double>(c.macrostate));
    s.z += g * w;
    s.first += g * w * static_cast<double>(c.macrostate);
  }
  for (const auto& c : e.entries) {
    const double g = c.multiplicity.convert_to<double>();
    const double p = std::exp(-gamma * static_cast<double>(c.macrostate)) / s.z;
    if (p > 0.0) {
      s.shannon -= g * p * std::log(p);
    }
  }
  return s;
}

}  // namespace

MicrostateEnumeration enumerate_microstates(const EnsembleSpec& spec) {
  if (spec.particles() > kMaxParticles || spec.states() > kMaxStates) {
    throw CapacityError("enumerate_microstates: N = " + std::to_string(spec.particles()) +
                        ", d = " + std::to_string(spec.states()) + " exceeds the guard N <= " +
                        std::to_string(kMaxParticles) + ", d <= " + std::to_string(kMaxStates));
  }
  MicrostateEnumeration e{spec, {}};
  std::vector<int> k(static_cast<std::size_t>(spec.states()), 0);
  fill(spec, k, 0, spec.particles(), e.entries);
  return e;
}

double brute_partition(const EnsembleSpec& spec, double gamma) { return sums(spec, gamma).z; }

double brute_average_spin(const EnsembleSpec& spec, double gamma) {
  const Sums s = sums(spec, gamma);
  return s.first / s.z - spec.spin().value() * spec.particles();
}

double brute_entropy(const EnsembleSpec& spec, double gamma) { return sums(spec, gamma).shannon; }

double finite_diff_response(const EnsembleSpec& spec, double tau, double h) {
  if (!(h > 0.0) || !(tau - h > 0.0)) {
    throw std::domain_error("finite_diff_response: requires h > 0 and tau - h > 0");
  }
  const double up = brute_average_spin(spec, 1.0 / (tau + h));
  const double down = brute_average_spin(spec, 1.0 / (tau - h));
  return (up - down) / (2.0 * h);
}

}  // namespace spintherm::oracle
