#include "spintherm/responses.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "spintherm/numeric.hpp"

namespace spintherm {

namespace {

void require_positive_tau(double tau, const char* where) {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw std::domain_error(std::string(where) + ": requires finite tau > 0");
  }
}

void require_states(int states, const char* where) {
  if (states < 2) {
    throw std::invalid_argument(std::string(where) + ": requires d >= 2");
  }
}

double log_z_at_tau(const EnsembleSpec& spec, double tau) {
  return log_partition({spec, InverseTemperature::from_tau(tau)});
}

}  // namespace

double waste_response_numeric(const EnsembleSpec& spec, double tau) {
  require_positive_tau(tau, "waste_response_numeric");
  const double gamma = 1.0 / tau;
  return gamma * gamma * macrostate_variance({spec, InverseTemperature(gamma)});
}

double waste_response_from_partition(const EnsembleSpec& spec, double tau) {
  require_positive_tau(tau, "waste_response_from_partition");
  const double h = 1e-3 * tau;
  const double f0 = log_z_at_tau(spec, tau);
  const double fp = log_z_at_tau(spec, tau + h);
  const double fm = log_z_at_tau(spec, tau - h);
  const double fp2 = log_z_at_tau(spec, tau + 0.5 * h);
  const double fm2 = log_z_at_tau(spec, tau - 0.5 * h);

  const double d1_coarse = (fp - fm) / (2.0 * h);
  const double d1_fine = (fp2 - fm2) / h;
  const double d1 = (4.0 * d1_fine - d1_coarse) / 3.0;

  const double d2_coarse = (fp - 2.0 * f0 + fm) / (h * h);
  const double d2_fine = (fp2 - 2.0 * f0 + fm2) / (0.25 * h * h);
  const double d2 = (4.0 * d2_fine - d2_coarse) / 3.0;

  return 2.0 * tau * d1 + tau * tau * d2;
}

double waste_response_distinguishable(const EnsembleSpec& spec, double tau) {
  if (spec.statistics() != Statistics::Distinguishable) {
    throw std::invalid_argument("waste_response_distinguishable: requires distinguishable "
                                "statistics, got " + std::string(to_string(spec.statistics())));
  }
  require_positive_tau(tau, "waste_response_distinguishable");
  const auto single = EnsembleSpec(Statistics::Distinguishable, 1, spec.spin());
  return waste_response_numeric(single, tau);
}

double waste_response_boson(int states, double tau) {
  require_states(states, "waste_response_boson");
  require_positive_tau(tau, "waste_response_boson");
  double sum = 0.0;
  const double scale = 1.0 / (4.0 * tau * tau);
  for (int j = 1; j < states; ++j) {
    const double y = j / (2.0 * tau);
    if (y > numeric::kSinhCutoff) {
      break;
    }
    sum += scale * j * j * numeric::inv_sinh_sq(y);
  }
  return sum;
}

double einstein_solid(double tau) {
  require_positive_tau(tau, "einstein_solid");
  const double y = 1.0 / (2.0 * tau);
  if (y > numeric::kSinhCutoff) {
    return 0.0;
  }
  // (1/tau^2) (1 / (e^{y} - e^{-y}))^2 = e^{-2y} / (tau^2 (1 - e^{-2y})^2)
  const double denom = std::expm1(-2.0 * y);
  return std::exp(-2.0 * y) / (tau * tau * denom * denom);
}

double debye(double tau, double cutoff) {
  require_positive_tau(tau, "debye");
  if (!(cutoff > 0.0) || !std::isfinite(cutoff)) {
    throw std::domain_error("debye: requires finite cutoff > 0");
  }
  using boost::math::quadrature::gauss_kronrod;
  // With x = j/tau the integral becomes tau^3 int_0^{c/tau} x^2 E(x) dx, E the
  // Einstein function. The integrand peaks near x ~ 2 and decays like
  // x^4 e^{-x}; past x = 80 it is below 1e-27 of the peak and is dropped.
  auto integrand = [](double x) { return x * x * numeric::einstein_function(x); };
  const double upper = cutoff / tau;
  const double knee = std::min(2.0, upper);
  const double tail_end = std::min(upper, 80.0);
  constexpr double kTol = 1e-13;
  // Each piece is mapped onto [0, 1]; the adaptive rule stalls on very short
  // intervals otherwise.
  auto piece = [&](double a, double b) {
    auto mapped = [&](double t) { return integrand(a + (b - a) * t); };
    return (b - a) * gauss_kronrod<double, 31>::integrate(mapped, 0.0, 1.0, 20, kTol);
  };
  double integral = piece(0.0, knee);
  if (tail_end > knee) {
    integral += piece(knee, tail_end);
  }
  return 3.0 * tau * tau * tau * integral / (cutoff * cutoff);
}

double waste_response(const ResponseModel& model, double tau) {
  struct Visitor {
    double tau;
    double operator()(const EnsembleSpec& spec) const { return waste_response_numeric(spec, tau); }
    double operator()(const DistinguishableModel& m) const {
      require_states(m.states, "waste_response");
      return waste_response_distinguishable(
          EnsembleSpec::with_states(Statistics::Distinguishable, 1, m.states), tau);
    }
    double operator()(const BosonModel& m) const { return waste_response_boson(m.states, tau); }
    double operator()(const EinsteinModel&) const { return einstein_solid(tau); }
    double operator()(const DebyeModel& m) const { return debye(tau, m.cutoff); }
  };
  return std::visit(Visitor{tau}, model);
}

double entropic_response(const ResponseModel& model, double tau) {
  return waste_response(model, tau) / tau;
}

std::string_view to_string(ResponseKind kind) {
  return kind == ResponseKind::WasteResponse ? "waste_response" : "entropic_response";
}

ResponseCurve response_curve(const ResponseModel& model, ResponseKind kind,
                             std::span<const double> tau_grid) {
  for (std::size_t i = 0; i < tau_grid.size(); ++i) {
    if (!(tau_grid[i] > 0.0) || (i > 0 && !(tau_grid[i] > tau_grid[i - 1]))) {
      throw std::invalid_argument("response_curve: tau grid must be positive and strictly increasing");
    }
  }
  ResponseCurve curve{{tau_grid.begin(), tau_grid.end()}, {}, kind};
  curve.values.reserve(tau_grid.size());
  for (double tau : tau_grid) {
    curve.values.push_back(kind == ResponseKind::WasteResponse ? waste_response(model, tau)
                                                               : entropic_response(model, tau));
  }
  return curve;
}

}  // namespace spintherm
