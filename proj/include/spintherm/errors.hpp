#pragma once

#include <stdexcept>
#include <string>

namespace spintherm {

// Argument errors use std::invalid_argument and domain violations use
// std::domain_error. The two types below cover the remaining failure modes.

/// A request exceeds a hard size guard (exact enumeration, fermion
/// coefficient extraction).
class CapacityError : public std::length_error {
 public:
  explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

/// The entropy-balance equation has no admissible root for the given
/// scenario, or the solver failed to converge.
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace spintherm
