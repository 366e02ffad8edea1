#include <cmath>
#include <cstdlib>
#include <vector>

#include "doctest.h"
#include "spintherm/battery.hpp"
#include "spintherm/errors.hpp"
#include "spintherm/thermo.hpp"

using namespace spintherm;

namespace {

BatterySpec scenario(double tau_env, double tau_batt, int d_s) {
  BatterySpec s;
  s.tau_env = tau_env;
  s.tau_E0 = tau_batt;
  s.tau_s0 = tau_batt;
  s.d_s = d_s;
  return s;
}

void check_identities(const BatterySpec& spec, const EquilibriumResult& r) {
  CHECK(r.residual <= kEntropyTolerance);
  CHECK(std::abs(total_entropy_change(spec, r.tau_f)) <= kEntropyTolerance);
  const double lo = spec.has_spin_bath() ? std::min(spec.tau_E0, spec.tau_s0) : spec.tau_E0;
  CHECK(r.tau_f >= lo);
  CHECK(r.tau_f <= spec.tau_env);
  CHECK(r.W_battery == r.Q_env - r.Q_batt + r.spin_therm);
  CHECK(r.W_conventional == r.Q_env - r.Q_batt);
  CHECK(r.spin_labor == r.spin_therm);
  CHECK(r.generalized_work == r.W_battery - r.spin_labor);
  if (r.Q_env > 0.0) {
    CHECK(r.eta_generalized == 1.0 - r.Q_batt / r.Q_env);
    CHECK(r.eta_energy == r.W_battery / r.Q_env);
  }
  CHECK(r.eta_carnot == 1.0 - spec.tau_E0 / spec.tau_env);
  CHECK(r.Q_env >= 0.0);
  CHECK(r.Q_batt >= 0.0);
  CHECK(r.spin_therm >= 0.0);
}

const double kBatteryTaus[] = {0.3, 0.367, 0.433, 0.5};

}  // namespace

TEST_CASE("spec validation") {
  BatterySpec s;
  CHECK_NOTHROW(s.validate());
  s.d_s = 1;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s.d_s = -2;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s = BatterySpec{};
  s.d_E = 1;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s = BatterySpec{};
  s.weight_s = 0.0;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s = BatterySpec{};
  s.tau_env = -0.6;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  CHECK_THROWS_AS(solve_equilibrium(s), std::invalid_argument);
}

TEST_CASE("entropy change") {
  const auto same = scenario(0.45, 0.45, 3);
  CHECK(total_entropy_change(same, 0.45) == 0.0);

  BatterySpec hot = scenario(60.0, 30.0, 0);
  hot.d_env = 2;
  hot.d_E = 2;
  CHECK(std::abs(total_entropy_change(hot, std::sqrt(60.0 * 30.0))) < 1e-4);

  const auto s = scenario(0.6, 0.3, 3);
  const auto r = solve_equilibrium(s);
  CHECK(total_entropy_change(s, r.tau_f + 1e-6) > 0.0);
  CHECK(total_entropy_change(s, r.tau_f - 1e-6) < 0.0);
}

TEST_CASE("entropy change is strictly increasing on the bracket") {
  for (int ds : {0, 2, 5, 8}) {
    for (double tb : kBatteryTaus) {
      const auto s = scenario(0.6, tb, ds);
      double previous = -INFINITY;
      for (int i = 0; i <= 200; ++i) {
        const double t = tb + (0.6 - tb) * i / 200.0;
        const double v = total_entropy_change(s, t);
        CHECK(v > previous);
        previous = v;
      }
    }
  }
}

TEST_CASE("equal temperatures do no work") {
  for (int ds : {0, 2, 7}) {
    const auto s = scenario(0.3, 0.3, ds);
    const auto r = solve_equilibrium(s);
    CHECK(r.tau_f == 0.3);
    CHECK(r.Q_env == 0.0);
    CHECK(r.Q_batt == 0.0);
    CHECK(r.spin_therm == 0.0);
    CHECK(r.W_battery == 0.0);
    CHECK(r.eta_energy == 0.0);
  }
}

TEST_CASE("no spin bath follows the endoreversible efficiency") {
  const auto r = solve_equilibrium(scenario(0.6, 0.3, 0));
  CHECK(std::abs(r.eta_energy - (1.0 - std::sqrt(0.5))) <= 0.02);
  check_identities(scenario(0.6, 0.3, 0), r);
}

TEST_CASE("high temperatures reproduce the geometric-mean final temperature") {
  for (auto [env, batt] : {std::pair{60.0, 30.0}, std::pair{2000.0, 1000.0}}) {
    BatterySpec s = scenario(env, batt, 0);
    s.d_env = 2;
    s.d_E = 2;
    const auto r = solve_equilibrium(s);
    CHECK(std::abs(r.tau_f - std::sqrt(env * batt)) / env <= 1e-5);
  }
  BatterySpec wide = scenario(6000.0, 3000.0, 0);
  const auto r = solve_equilibrium(wide);
  CHECK(std::abs(r.tau_f - std::sqrt(6000.0 * 3000.0)) / 6000.0 <= 1e-3);
  CHECK(std::abs(r.eta_energy - (1.0 - std::sqrt(0.5))) <= 2e-3);
}

TEST_CASE("a spin bath lifts the efficiency above Carnot") {
  const auto r = solve_equilibrium(scenario(0.6, 0.3, 3));
  CHECK(r.eta_carnot == doctest::Approx(0.5));
  CHECK(r.eta_energy > 0.5);
}

TEST_CASE("efficiency ordering across battery temperatures") {
  for (double tb : kBatteryTaus) {
    double previous = -1.0;
    for (int ds = 0; ds <= 8; ++ds) {
      if (ds == 1) {
        continue;
      }
      const auto s = scenario(0.6, tb, ds);
      const auto r = solve_equilibrium(s);
      check_identities(s, r);
      if (ds == 0) {
        CHECK(r.eta_energy <= r.eta_carnot);
      } else {
        CHECK(r.eta_energy > r.eta_carnot);
      }
      CHECK(r.eta_energy >= previous);
      previous = r.eta_energy;
    }
  }
}

TEST_CASE("restarting from the final temperature is stationary") {
  for (int ds : {0, 2, 5}) {
    for (double tb : kBatteryTaus) {
      const auto first = solve_equilibrium(scenario(0.6, tb, ds));
      const auto again = solve_equilibrium(scenario(first.tau_f, first.tau_f, ds));
      CHECK(again.tau_f == first.tau_f);
      CHECK(again.W_battery == 0.0);
      CHECK(again.Q_env == 0.0);
    }
  }
}

TEST_CASE("unequal weights and spin-bath temperatures") {
  BatterySpec s = scenario(1.2, 0.4, 4);
  s.tau_s0 = 0.25;
  s.weight_env = 3.0;
  s.weight_E = 0.5;
  s.weight_s = 2.0;
  s.d_env = 50;
  s.d_E = 30;
  const auto r = solve_equilibrium(s);
  check_identities(s, r);
  CHECK(r.tau_f > 0.25);
}

TEST_CASE("infeasible ordering") {
  CHECK_THROWS_AS(solve_equilibrium(scenario(0.2, 0.3, 0)), InfeasibleError);
  BatterySpec s = scenario(0.6, 0.3, 2);
  s.tau_s0 = 0.7;
  CHECK_THROWS_AS(solve_equilibrium(s), InfeasibleError);
  // Without a spin bath tau_s0 is irrelevant.
  s.d_s = 0;
  CHECK_NOTHROW(solve_equilibrium(s));
}

TEST_CASE("sweep layout and error cells") {
  const std::vector<int> ds{0, 2};
  const std::vector<double> tb{0.3, 0.9, 0.5};
  const auto cells = sweep_efficiency(scenario(0.6, 0.3, 0), ds, tb);
  REQUIRE(cells.size() == 6);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    CHECK(cells[i].d_s == ds[i / 3]);
    CHECK(cells[i].tau_batt == tb[i % 3]);
    const bool hot_battery = cells[i].tau_batt > 0.6;
    CHECK((cells[i].status == CellStatus::Infeasible) == hot_battery);
    CHECK(cells[i].result.has_value() == !hot_battery);
    CHECK(cells[i].error.empty() == !hot_battery);
  }
  const auto single = solve_equilibrium(scenario(0.6, 0.5, 2));
  CHECK(cells[5].result->eta_energy == single.eta_energy);
  CHECK(cells[5].result->tau_f == single.tau_f);
}

TEST_CASE("sweep output does not depend on the worker count") {
  std::vector<int> ds;
  for (int d = 0; d <= 8; ++d) {
    ds.push_back(d);
  }
  const auto base = scenario(0.6, 0.3, 0);
  const auto serial = sweep_efficiency(base, ds, kBatteryTaus, 1);
  const auto parallel = sweep_efficiency(base, ds, kBatteryTaus, 8);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].d_s == parallel[i].d_s);
    CHECK(serial[i].error == parallel[i].error);
    if (serial[i].result) {
      CHECK(serial[i].result->eta_energy == parallel[i].result->eta_energy);
      CHECK(serial[i].result->tau_f == parallel[i].result->tau_f);
    }
  }
  CHECK(serial[4].d_s == 1);
  CHECK(serial[4].error.find("d_s") != std::string::npos);
  CHECK(serial[4].status == CellStatus::InvalidSpec);
  CHECK(serial[0].status == CellStatus::Solved);
}

TEST_CASE("endoreversible reference") {
  const auto p = endoreversible_reference(0.3, 0.6);
  CHECK(p.tau_f == doctest::Approx(0.42426).epsilon(1e-5));
  CHECK(p.eta == doctest::Approx(0.29289).epsilon(1e-5));
  const auto same = endoreversible_reference(0.4, 0.4);
  CHECK(same.tau_f == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(same.eta == 0.0);
  const auto exact = endoreversible_reference(0.25, 1.0);
  CHECK(exact.tau_f == 0.5);
  CHECK(exact.eta == 0.5);
  CHECK_THROWS_AS(endoreversible_reference(0.7, 0.6), std::invalid_argument);
  CHECK_THROWS_AS(endoreversible_reference(0.0, 0.6), std::invalid_argument);
}
