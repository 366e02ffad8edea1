#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spintherm/battery.hpp"
#include "spintherm/cli/table.hpp"
#include "spintherm/statmech.hpp"

namespace spintherm::cli {

/// Malformed user input; maps to exit status 2.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitInfeasible = 3;

/// "a,b,c" with optional inclusive ranges "lo..hi", e.g. "0..4,8".
std::vector<int> parse_int_list(std::string_view text);
/// "a,b,c" of reals.
std::vector<double> parse_real_list(std::string_view text);

struct TauGrid {
  double start = 0.05;
  double stop = 10.0;
  int count = 200;
  bool log_spacing = false;

  /// Throws ConfigError unless count >= 2 and 0 < start < stop.
  void validate() const;
  /// Endpoints are reproduced exactly.
  [[nodiscard]] std::vector<double> values() const;
};

struct CommandOutput {
  Table table;
  int status = kExitOk;
};

struct BatteryOptions {
  BatterySpec base;
  std::vector<int> d_s{0};
  std::vector<double> tau_batt{0.3};
  unsigned threads = 0;
};

/// Sweep table, one row per (d_s, tau_batt). Rows whose solve failed carry
/// the message in the error column. Any infeasible row sets status to
/// kExitInfeasible; rows with an invalid d_s set kExitConfig only when no row
/// was solved.
CommandOutput cmd_battery(const BatteryOptions& options);

/// Re-solves every cell with d_env and d_E doubled and reports the shift.
CommandOutput cmd_convergence(const BatteryOptions& options);

struct ResponseOptions {
  std::vector<std::string> models{"boson"};
  int states = 2;
  /// Debye cutoff; a negative value means d - 1.
  double cutoff = -1.0;
  std::vector<double> tau;
};

/// Columns model, tau, C_s, C_s_over_tau.
CommandOutput cmd_response(const ResponseOptions& options);

struct EntropyOptions {
  Statistics statistics = Statistics::Boson;
  int particles = 1;
  int states = 2;
  std::vector<double> tau;
};

/// Columns tau, entropy, heat; bosons add the infinite-N entropy_limit and
/// heat_limit columns.
CommandOutput cmd_entropy(const EntropyOptions& options);

struct PolarizationOptions {
  std::vector<double> spins{0.5};
  std::vector<double> alphas;
};

/// Columns S, alpha, tau, tau_infinite. Rows at alpha = 1/2 report tau = inf
/// and tau_infinite = true.
CommandOutput cmd_polarization(const PolarizationOptions& options);

}  // namespace spintherm::cli
