#pragma once

// Numerically stable building blocks shared by the thermodynamic models.
// All arguments are dimensionless; x is a level spacing divided by the
// temperature (x = j / tau).

namespace spintherm::numeric {

/// Beyond this half-argument 1/sinh^2 is treated as exactly zero.
inline constexpr double kSinhCutoff = 350.0;

/// ln(1 - e^{-x}) for x > 0.
double log1mexp(double x);

/// ln((1 - e^{-x}) / x); tends to 0 as x -> 0.
double log1mexp_over_x(double x);

/// 1 / (e^x - 1), the mean occupation of a bosonic mode.
double bose_factor(double x);

/// 1 / (e^x - 1) - 1 / x. Finite at x = 0 (value -1/2).
double bose_factor_minus_pole(double x);

/// 1 / sinh^2(y) in exponential-difference form, zero for y > kSinhCutoff.
double inv_sinh_sq(double y);

/// Einstein function x^2 / (4 sinh^2(x/2)); equals 1 at x = 0.
double einstein_function(double x);

/// 1 - einstein_function(x), accurate for small x.
double einstein_complement(double x);

/// sinh(y) - y, accurate for small y.
double sinh_minus_identity(double y);

}  // namespace spintherm::numeric
