#pragma once

#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "spintherm/statmech.hpp"

namespace spintherm {

/// Finite-N total waste response C_s = d<Jz>/dtau = Var(j) / tau^2 from the
/// analytic second moment of the ensemble. Throws std::domain_error for tau <= 0.
double waste_response_numeric(const EnsembleSpec& spec, double tau);

/// C_s = 2 tau dlnZ/dtau + tau^2 d^2lnZ/dtau^2 with both derivatives taken by
/// Richardson-extrapolated central differences of ln Z. Independent of the
/// moment formulas; reliable for moderate tau.
double waste_response_from_partition(const EnsembleSpec& spec, double tau);

/// Per-particle Var(j)/tau^2 of the single-particle Boltzmann distribution.
/// Requires distinguishable statistics.
double waste_response_distinguishable(const EnsembleSpec& spec, double tau);

/// Infinite-N boson waste response sum_{j=1}^{d-1} j^2 / (4 tau^2 sinh^2(j/2tau)).
double waste_response_boson(int states, double tau);

/// Unitless Einstein solid, one degree of freedom.
double einstein_solid(double tau);

/// Unitless Debye model, (3/(tau^2 c^2)) int_0^c j^4 / (e^{j/2tau} - e^{-j/2tau})^2 dj
/// with cutoff c = 2S. Tends to c at high tau and scales as tau^3 at low tau.
double debye(double tau, double cutoff);

struct DistinguishableModel {
  int states;
};
struct BosonModel {
  int states;
};
struct EinsteinModel {};
struct DebyeModel {
  double cutoff;
};

/// A finite-N ensemble selects waste_response_numeric; the others select the
/// per-particle analytic models.
using ResponseModel =
    std::variant<EnsembleSpec, DistinguishableModel, BosonModel, EinsteinModel, DebyeModel>;

double waste_response(const ResponseModel& model, double tau);

/// C_s / tau = dS/dtau.
double entropic_response(const ResponseModel& model, double tau);

enum class ResponseKind { WasteResponse, EntropicResponse };

std::string_view to_string(ResponseKind kind);

struct ResponseCurve {
  std::vector<double> tau_grid;
  std::vector<double> values;
  ResponseKind kind;
};

/// Samples a response over a strictly increasing, positive tau grid.
ResponseCurve response_curve(const ResponseModel& model, ResponseKind kind,
                             std::span<const double> tau_grid);

}  // namespace spintherm
