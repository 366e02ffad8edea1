#include <cmath>
#include <vector>

#include "doctest.h"
#include "spintherm/errors.hpp"
#include "spintherm/oracle.hpp"
#include "spintherm/statmech.hpp"
#include "support.hpp"

using namespace spintherm;
using spintherm::test::rel_err;

namespace {

const Statistics kAll[] = {Statistics::Distinguishable, Statistics::Boson, Statistics::Fermion};
const double kGammas[] = {-2.0, -0.5, 0.0, 0.5, 2.0};

ThermalPoint at(Statistics s, int n, int d, double gamma) {
  return {EnsembleSpec::with_states(s, n, d), InverseTemperature(gamma)};
}

}  // namespace

TEST_CASE("spin and ensemble construction") {
  CHECK(Spin::from_value(1.5).states() == 4);
  CHECK(Spin::from_states(3).value() == 1.0);
  CHECK_THROWS_AS(Spin::from_value(0.3), std::invalid_argument);
  CHECK_THROWS_AS(Spin::from_value(-0.5), std::invalid_argument);
  CHECK_THROWS_AS(EnsembleSpec::with_states(Statistics::Fermion, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(EnsembleSpec::with_states(Statistics::Boson, 0, 2), std::invalid_argument);
  CHECK(parse_statistics("dist") == Statistics::Distinguishable);
  CHECK_THROWS_AS(parse_statistics("anyon"), std::invalid_argument);
}

TEST_CASE("inverse temperature") {
  CHECK(InverseTemperature::from_tau(INFINITY).is_infinite_temperature());
  CHECK(InverseTemperature::from_tau(-INFINITY).is_infinite_temperature());
  CHECK_FALSE(InverseTemperature::infinite_temperature().tau().has_value());
  CHECK(*InverseTemperature::from_tau(4.0).tau() == 4.0);
  CHECK_THROWS_AS(InverseTemperature::from_tau(0.0), std::domain_error);
  CHECK_THROWS_AS(InverseTemperature::from_tau(NAN), std::domain_error);
  CHECK_THROWS_AS(InverseTemperature{INFINITY}, std::domain_error);
}

TEST_CASE("partition function values") {
  for (auto s : kAll) {
    CHECK(log_partition(at(s, 1, 2, 0.0)) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  }
  CHECK(log_partition(at(Statistics::Boson, 2, 2, 0.0)) ==
        doctest::Approx(std::log(3.0)).epsilon(1e-15));
  CHECK(log_partition(at(Statistics::Distinguishable, 2, 2, 1.0)) ==
        doctest::Approx(std::log(1.0 + 2.0 * std::exp(-1.0) + std::exp(-2.0))).epsilon(1e-15));
  CHECK(std::exp(log_partition(at(Statistics::Distinguishable, 2, 2, 1.0))) ==
        doctest::Approx(1.871094).epsilon(1e-6));
}

TEST_CASE("average spin values") {
  for (auto s : kAll) {
    CHECK(std::abs(average_spin(at(s, 1, 2, 0.0))) < 1e-15);
    CHECK(average_spin(at(s, 1, 2, 50.0)) == doctest::Approx(-0.5).epsilon(1e-12));
  }
  const double e = std::exp(-1.0);
  CHECK(average_spin(at(Statistics::Distinguishable, 1, 2, 1.0)) ==
        doctest::Approx((-0.5 + 0.5 * e) / (1.0 + e)).epsilon(1e-14));
  CHECK(average_spin(at(Statistics::Distinguishable, 1, 2, 1.0)) ==
        doctest::Approx(-0.231059).epsilon(1e-6));
}

TEST_CASE("entropy values") {
  for (auto s : kAll) {
    CHECK(entropy(at(s, 1, 2, 50.0)) < 1e-12);
    CHECK(entropy(at(s, 2, 3, 50.0)) < 1e-12);
  }
  for (int n = 1; n <= 6; ++n) {
    for (int d = 1; d <= 7; ++d) {
      CHECK(entropy(at(Statistics::Distinguishable, n, d, 0.0)) ==
            doctest::Approx(n * std::log(static_cast<double>(d))).epsilon(1e-14));
    }
  }
  const double e = std::exp(-1.0);
  const double expected = std::log1p(e) + e / (1.0 + e);
  CHECK(entropy(at(Statistics::Distinguishable, 1, 2, 1.0)) ==
        doctest::Approx(expected).epsilon(1e-14));
  CHECK(expected == doctest::Approx(0.582203).epsilon(1e-6));
}

TEST_CASE("closed forms agree with brute-force enumeration") {
  for (auto s : kAll) {
    for (int n = 1; n <= 5; ++n) {
      for (int d = 1; d <= 4; ++d) {
        if (s == Statistics::Fermion && n > d) {
          continue;
        }
        const auto spec = EnsembleSpec::with_states(s, n, d);
        for (double g : kGammas) {
          CAPTURE(to_string(s));
          CAPTURE(n);
          CAPTURE(d);
          CAPTURE(g);
          const ThermalPoint p{spec, InverseTemperature(g)};
          CHECK(rel_err(log_partition(p), std::log(oracle::brute_partition(spec, g))) <= 1e-12);
          CHECK(rel_err(average_spin(p), oracle::brute_average_spin(spec, g)) <= 1e-12);
          CHECK(rel_err(entropy(p), oracle::brute_entropy(spec, g)) <= 1e-12);
        }
      }
    }
  }
}

TEST_CASE("entropy is the same in the physical and computational bases") {
  for (auto s : kAll) {
    for (int n = 1; n <= 4; ++n) {
      for (int d = 2; d <= 5; ++d) {
        if (s == Statistics::Fermion && n > d) {
          continue;
        }
        for (double g : kGammas) {
          const auto p = at(s, n, d, g);
          const double shift = p.spec.spin_shift();
          const double log_z_phys = log_partition(p) + g * shift;
          const double physical = log_z_phys + g * average_spin(p);
          const double computational = log_partition(p) + g * mean_macrostate(p);
          CHECK(std::abs(physical - computational) <= 1e-12 * std::max(1.0, computational));
          CHECK(std::abs(entropy(p) - computational) <= 1e-12 * std::max(1.0, computational));
        }
      }
    }
  }
}

TEST_CASE("probabilities sum to one") {
  for (auto s : kAll) {
    for (int n = 1; n <= 4; ++n) {
      for (int d = 1; d <= 4; ++d) {
        if (s == Statistics::Fermion && n > d) {
          continue;
        }
        const auto spec = EnsembleSpec::with_states(s, n, d);
        const auto configs = oracle::enumerate_microstates(spec);
        for (double g : kGammas) {
          const ThermalPoint p{spec, InverseTemperature(g)};
          double total = 0.0;
          double micro_total = 0.0;
          for (const auto& c : configs.entries) {
            total += probability(p, c.occupation);
            micro_total += c.multiplicity.convert_to<double>() *
                           probability(p, c.occupation, ProbabilityConvention::Microstate);
          }
          CHECK(std::abs(total - 1.0) <= 1e-12);
          CHECK(std::abs(micro_total - 1.0) <= 1e-12);
        }
      }
    }
  }
}

TEST_CASE("configuration probabilities") {
  const std::vector<int> one_each{1, 1};
  CHECK(probability(at(Statistics::Boson, 2, 2, 0.0), one_each) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(probability(at(Statistics::Distinguishable, 2, 2, 0.0), one_each) ==
        doctest::Approx(0.5).epsilon(1e-15));
  CHECK(probability(at(Statistics::Distinguishable, 2, 2, 0.0), one_each,
                    ProbabilityConvention::Microstate) == doctest::Approx(0.25).epsilon(1e-15));
  for (double g : kGammas) {
    CHECK(probability(at(Statistics::Fermion, 2, 2, g), one_each) ==
          doctest::Approx(1.0).epsilon(1e-15));
  }
  CHECK_THROWS_AS(probability(at(Statistics::Boson, 2, 2, 0.0), std::vector<int>{2, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(probability(at(Statistics::Fermion, 2, 3, 0.0), std::vector<int>{2, 0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(probability(at(Statistics::Boson, 2, 2, 0.0), std::vector<int>{2}),
                  std::invalid_argument);
}

TEST_CASE("spectrum reflection") {
  for (auto s : kAll) {
    for (int n = 1; n <= 5; ++n) {
      for (int d = 2; d <= 6; ++d) {
        if (s == Statistics::Fermion && n > d) {
          continue;
        }
        for (double g : {0.01, 0.3, 1.0, 4.0, 40.0}) {
          const auto up = at(s, n, d, g);
          const auto down = at(s, n, d, -g);
          CHECK(average_spin(up) == doctest::Approx(-average_spin(down)).epsilon(1e-13));
          CHECK(entropy(up) == doctest::Approx(entropy(down)).epsilon(1e-13));
        }
      }
    }
  }
}

TEST_CASE("dS/d<Jz> equals gamma") {
  for (auto s : kAll) {
    for (double g : {-1.5, -0.2, 0.3, 1.0, 2.5}) {
      const int n = 3;
      const int d = 4;
      const double h = 1e-5;
      const auto plus = at(s, n, d, g + h);
      const auto minus = at(s, n, d, g - h);
      const double ratio =
          (entropy(plus) - entropy(minus)) / (average_spin(plus) - average_spin(minus));
      CAPTURE(to_string(s));
      CHECK(ratio == doctest::Approx(g).epsilon(1e-6));
    }
  }
}

TEST_CASE("saturated fermions carry no entropy") {
  for (int d = 1; d <= 12; ++d) {
    for (double g : {-30.0, -2.0, -0.5, 0.0, 1e-9, 0.5, 2.0, 30.0}) {
      CHECK(std::abs(entropy(at(Statistics::Fermion, d, d, g))) <= 1e-12);
    }
  }
}

TEST_CASE("fermion capacity guard") {
  CHECK_NOTHROW(log_partition(at(Statistics::Fermion, 4, 2500, 1.0)));
  CHECK_THROWS_AS(log_partition(at(Statistics::Fermion, 5, 2001, 1.0)), CapacityError);
}

TEST_CASE("boson small-gamma series joins the product form") {
  for (int n : {1, 7, 1000}) {
    for (int d : {2, 3, 9}) {
      const double exact0 = [&] {
        double s = 0.0;
        for (int i = 1; i < d; ++i) {
          s += std::log1p(static_cast<double>(n) / i);
        }
        return s;
      }();
      CHECK(log_partition(at(Statistics::Boson, n, d, 0.0)) ==
            doctest::Approx(exact0).epsilon(1e-15));
      // Step across the threshold and compare with a first-order Taylor step.
      const double below = 0.999e-8;
      const double above = 1.001e-8;
      const auto p = at(Statistics::Boson, n, d, below);
      const auto q = at(Statistics::Boson, n, d, above);
      const double step = above - below;
      CHECK(log_partition(q) ==
            doctest::Approx(log_partition(p) - mean_macrostate(p) * step).epsilon(1e-13));
      CHECK(mean_macrostate(q) ==
            doctest::Approx(mean_macrostate(p) - macrostate_variance(p) * step).epsilon(1e-13));
      CHECK(macrostate_variance(q) == doctest::Approx(macrostate_variance(p)).epsilon(1e-9));
    }
  }
}

TEST_CASE("boson moments are continuous across the pole-free switch") {
  // The pole-free branch is used when i*gamma < 1.
  for (int n : {1, 10, 500}) {
    for (int d : {2, 5}) {
      const auto lo = at(Statistics::Boson, n, d, 1.0 - 1e-12);
      const auto hi = at(Statistics::Boson, n, d, 1.0 + 1e-12);
      CHECK(log_partition(lo) == doctest::Approx(log_partition(hi)).epsilon(1e-11));
      CHECK(mean_macrostate(lo) == doctest::Approx(mean_macrostate(hi)).epsilon(1e-11));
      CHECK(macrostate_variance(lo) == doctest::Approx(macrostate_variance(hi)).epsilon(1e-10));
    }
  }
}

TEST_CASE("occupations") {
  const Spin half = Spin::from_value(0.5);
  const Spin two = Spin::from_value(2.0);
  CHECK(occupation_bose(3, two, 1.0) == doctest::Approx(1.0 / (std::exp(1.0) - 1.0)));
  CHECK(occupation_bose(3, two, 1.0) == doctest::Approx(0.581977).epsilon(1e-6));
  CHECK(occupation_bose(4, two, 1.0) == doctest::Approx(0.156518).epsilon(1e-6));
  CHECK(occupation_bose(3, two, 0.01) < 1e-40);
  CHECK_THROWS_AS(occupation_bose(1, two, 1.0), std::domain_error);
  CHECK_THROWS_AS(occupation_bose(2, two, 1.0), std::domain_error);
  CHECK_THROWS_AS(occupation_bose(3, two, -1.0), std::domain_error);
  CHECK_THROWS_AS(occupation_bose(5, two, 1.0), std::invalid_argument);

  CHECK(occupation_fermi(2, two, 0.7) == 0.5);
  CHECK(occupation_fermi(3, two, 1.0) == doctest::Approx(0.268941).epsilon(1e-6));
  CHECK(occupation_fermi(1, two, 1.0) == doctest::Approx(0.731059).epsilon(1e-6));
  CHECK(occupation_fermi(1, half, 1e-3) == doctest::Approx(std::exp(-500.0)).epsilon(1e-10));
  CHECK_THROWS_AS(occupation_fermi(0, half, 0.0), std::domain_error);
}

TEST_CASE("Fermi occupations are particle-hole symmetric") {
  for (int twice = 0; twice <= 9; ++twice) {
    const Spin s = Spin::from_twice(twice);
    for (int j = 0; j <= twice; ++j) {
      for (double tau : {-3.0, -0.1, 0.05, 0.5, 1.0, 7.0}) {
        CHECK(occupation_fermi(j, s, tau) + occupation_fermi(twice - j, s, tau) ==
              doctest::Approx(1.0).epsilon(1e-15));
      }
    }
  }
}
