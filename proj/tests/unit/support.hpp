#pragma once

#include <algorithm>
#include <cmath>

namespace spintherm::test {

// Relative error with an absolute floor at |reference| < 1, so exact zeros
// are compared absolutely.
inline double rel_err(double value, double reference) {
  return std::abs(value - reference) / std::max(std::abs(reference), 1.0);
}

}  // namespace spintherm::test
