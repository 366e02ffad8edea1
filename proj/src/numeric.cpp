#include "spintherm/numeric.hpp"

#include <cmath>
#include <limits>

namespace spintherm::numeric {

double log1mexp(double x) {
  // Maechler's split: expm1 near the origin, log1p in the tail.
  if (x <= std::log(2.0)) {
    return std::log(-std::expm1(-x));
  }
  return std::log1p(-std::exp(-x));
}

double log1mexp_over_x(double x) {
  if (x == 0.0) {
    return 0.0;
  }
  if (x < 0.1) {
    // -x/2 + ln(sinh(x/2) / (x/2))
    const double x2 = x * x;
    return -0.5 * x + x2 * (1.0 / 24.0 + x2 * (-1.0 / 2880.0 + x2 / 181440.0));
  }
  if (x < 1.0) {
    return std::log(-std::expm1(-x) / x);
  }
  return log1mexp(x) - std::log(x);
}

double bose_factor(double x) { return 1.0 / std::expm1(x); }

double bose_factor_minus_pole(double x) {
  if (std::abs(x) < 0.1) {
    // Bernoulli expansion of 1/(e^x - 1) with the 1/x pole removed.
    const double x2 = x * x;
    return -0.5 +
           x * (1.0 / 12.0 +
                x2 * (-1.0 / 720.0 +
                      x2 * (1.0 / 30240.0 + x2 * (-1.0 / 1209600.0 + x2 / 47900160.0))));
  }
  return 1.0 / std::expm1(x) - 1.0 / x;
}

double inv_sinh_sq(double y) {
  y = std::abs(y);
  if (y > kSinhCutoff) {
    return 0.0;
  }
  if (y == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  const double denom = std::expm1(-2.0 * y);
  return 4.0 * std::exp(-2.0 * y) / (denom * denom);
}

double sinh_minus_identity(double y) {
  if (std::abs(y) >= 1.0) {
    return std::sinh(y) - y;
  }
  const double y2 = y * y;
  double term = y * y2 / 6.0;
  double sum = term;
  for (int n = 2; n < 30; ++n) {
    term *= y2 / ((2.0 * n) * (2.0 * n + 1.0));
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) {
      break;
    }
  }
  return sum;
}

double einstein_function(double x) {
  const double y = 0.5 * std::abs(x);
  if (y > kSinhCutoff) {
    return 0.0;
  }
  if (y < 1e-8) {
    return 1.0 - y * y / 3.0;
  }
  if (y < 1.0) {
    const double r = y / std::sinh(y);
    return r * r;
  }
  return y * y * inv_sinh_sq(y);
}

double einstein_complement(double x) {
  const double y = 0.5 * std::abs(x);
  if (y == 0.0) {
    return 0.0;
  }
  if (y < 1.0) {
    // 1 - y^2/sinh^2 y = (sinh y - y)(sinh y + y) / sinh^2 y
    const double s = sinh_minus_identity(y);
    const double sh = y + s;
    return s * (2.0 * y + s) / (sh * sh);
  }
  return 1.0 - einstein_function(x);
}

}  // namespace spintherm::numeric
