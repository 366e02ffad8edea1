#pragma once

#include <vector>

#include "spintherm/combinatorics.hpp"
#include "spintherm/statmech.hpp"

// Brute-force reference sums over explicitly enumerated configurations.
// Only the EnsembleSpec type and multinomial() are shared with the library.

namespace spintherm::oracle {

inline constexpr int kMaxParticles = 12;
inline constexpr int kMaxStates = 8;

struct Configuration {
  std::vector<int> occupation;  ///< k_j, particles in state j
  BigInt multiplicity;          ///< labelled microstates sharing this k
  long macrostate;              ///< sum_j j * k_j
};

struct MicrostateEnumeration {
  EnsembleSpec spec;
  std::vector<Configuration> entries;

  [[nodiscard]] BigInt total_multiplicity() const;
};

/// Every occupation vector allowed by the statistics, in lexicographic order
/// with k_0 descending. Throws CapacityError for N > 12 or d > 8.
MicrostateEnumeration enumerate_microstates(const EnsembleSpec& spec);

/// Z = sum g(k) e^{-gamma m(k)} (not its logarithm).
double brute_partition(const EnsembleSpec& spec, double gamma);

/// Physical <Jz> = <m> - S N.
double brute_average_spin(const EnsembleSpec& spec, double gamma);

/// Shannon entropy -sum P ln P over labelled microstates.
double brute_entropy(const EnsembleSpec& spec, double gamma);

/// (<Jz>(tau+h) - <Jz>(tau-h)) / (2h). Requires tau - h > 0.
double finite_diff_response(const EnsembleSpec& spec, double tau, double h);

}  // namespace spintherm::oracle
