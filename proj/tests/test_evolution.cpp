#include <doctest.h>

#include <cmath>
#include <numbers>

#include "decohere/evolution.hpp"
#include "decohere/scenarios.hpp"

using namespace decohere;

namespace {

const ScenarioParams& ion() { return *find_builtin("tegmark-mt-ion")->params(); }
const ScenarioParams& dipole() { return *find_builtin("hht-mt-dipole")->params(); }

DecayCurve synthetic(double tau0, double power) {
  DecayCurve c;
  c.times_s = default_time_grid(seconds(tau0), 60);
  for (double t : c.times_s) c.values.push_back(std::exp(-std::pow(t / tau0, power)));
  return c;
}

ScenarioParams at_ratio(const ScenarioParams& sc, double ratio) {
  return sc.with_temperature(crossover_temperature(sc.M, sc.R) / (ratio * ratio));
}

}  // namespace

TEST_CASE("ensemble and quadrature settings are validated") {
  CHECK_THROWS_AS((EnsembleSpec{meters(0.0)}.validate()), DomainError);
  CHECK_THROWS_AS((EnsembleSpec{meters(1e-9), 3.0}.validate()), DomainError);
  QuadratureConfig cfg;
  cfg.max_phase_step = 2.0;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  cfg = {};
  cfg.rel_tol = 0.0;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  CHECK(EnsembleSpec{meters(1.0)}.sigma_m() == doctest::Approx(std::numbers::sqrt2));
}

TEST_CASE("interaction names") {
  CHECK(parse_interaction("ion") == Interaction::kIon);
  CHECK(parse_interaction("dipole") == Interaction::kDipole);
  CHECK(to_string(Interaction::kDipole) == "dipole");
  CHECK_THROWS_AS(parse_interaction("quadrupole"), ParseError);
}

TEST_CASE("coherence factor: trivial cases") {
  const EnsembleSpec ens{meters(1e-9)};
  const EnergyProfile dv = interaction_profile(ion(), Interaction::kIon);
  CHECK(coherence_factor(dv, ens, seconds(0.0)) == doctest::Approx(1.0).epsilon(1e-6));
  const EnergyProfile flat = [](double) { return 1e-20; };
  for (double t : {0.0, 1e-15, 1e-12, 1e-9}) {
    CHECK(coherence_factor(flat, ens, seconds(t)) == doctest::Approx(1.0).epsilon(1e-6));
  }
  CHECK_THROWS_AS(coherence_factor(dv, ens, seconds(-1e-15)), DomainError);
  CHECK_THROWS_AS(coherence_factor(dv, ens, meters(1.0)), DimensionError);
}

TEST_CASE("coherence factor: reports non-convergence with the worst subinterval") {
  const EnsembleSpec ens{meters(1e-9)};
  QuadratureConfig cfg;
  cfg.max_subdivisions = 40;
  const EnergyProfile dv = interaction_profile(ion(), Interaction::kIon);
  const Quantity t = 1e3 * tau_ion_narrow_lambda(ion(), ens.lambda).tau;
  try {
    (void)coherence_factor(dv, ens, t, cfg);
    FAIL("expected a convergence error");
  } catch (const ConvergenceError& e) {
    CHECK(e.worst_lo() < e.worst_hi());
    CHECK(e.kind() == "convergence");
  }
}

TEST_CASE("coherence factor: gaussian envelope at lambda/d = 0.02") {
  const ScenarioParams sc = at_ratio(ion(), 0.02);
  const EnsembleSpec ens{0.02 * sc.R};
  const Quantity tau15 = tau_ion_narrow_lambda(sc, ens.lambda).tau;
  const double d = coherence_factor(interaction_profile(sc, Interaction::kIon), ens, tau15);
  CHECK(d == doctest::Approx(std::exp(-1.0)).epsilon(0.05));
}

TEST_CASE("property: time reversal, offset invariance and step halving") {
  for (Interaction inter : {Interaction::kIon, Interaction::kDipole}) {
    const ScenarioParams& base = inter == Interaction::kIon ? ion() : dipole();
    for (double ratio : {0.02, 1.0, 10.0}) {
      const ScenarioParams sc = at_ratio(base, ratio);
      const EnsembleSpec ens{ratio * sc.R};
      const EnergyProfile dv = interaction_profile(sc, inter);
      const EnergyProfile neg = [&dv](double x) { return -dv(x); };
      const EnergyProfile shifted = [&dv](double x) { return dv(x) + 4.2e-21; };
      QuadratureConfig fine;
      fine.max_phase_step /= 2.0;
      const Quantity tau = expected_tau(sc, inter, ens.lambda);
      for (double f : {0.1, 0.5, 1.0, 2.0}) {
        const Quantity t = f * tau;
        const double d = coherence_factor(dv, ens, t);
        CHECK(d >= 0.0);
        CHECK(d <= 1.0 + 1e-9);
        CHECK(std::fabs(coherence_factor(neg, ens, t) - d) <= 1e-6);
        CHECK(std::fabs(coherence_factor(shifted, ens, t) - d) <= 1e-6);
        CHECK(std::fabs(coherence_factor(dv, ens, t, fine) - d) <= 1e-6);
      }
    }
  }
}

TEST_CASE("decay curve grid requirements") {
  const EnsembleSpec ens{meters(1e-12)};
  const EnergyProfile dv = interaction_profile(ion(), Interaction::kIon);
  const std::vector<double> no_zero{1e-15, 2e-15};
  const std::vector<double> not_increasing{0.0, 2e-15, 2e-15};
  CHECK_THROWS_AS(decay_curve(dv, ens, no_zero), DomainError);
  CHECK_THROWS_AS(decay_curve(dv, ens, not_increasing), DomainError);
  CHECK_THROWS_AS(decay_curve(dv, ens, std::vector<double>{}), DomainError);

  const auto grid = default_time_grid(seconds(1e-12));
  REQUIRE(grid.size() == 61);
  CHECK(grid[0] == 0.0);
  CHECK(grid[1] == doctest::Approx(1e-14));
  CHECK(grid.back() == doctest::Approx(1e-10));
  CHECK_THROWS_AS(default_time_grid(seconds(1e-12), 1), DomainError);

  const DecayCurve curve = decay_curve(dv, ens, grid);
  CHECK(curve.values.front() == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(curve.values.size() == grid.size());
}

TEST_CASE("extract_tau on synthetic curves") {
  const double tau0 = 3.3e-12;
  const TauEstimate g = extract_tau(synthetic(tau0, 2.0));
  CHECK(g.tau.value() == doctest::Approx(tau0).epsilon(0.01));
  CHECK(g.method == Method::kOracleQuadrature);
  CHECK(extract_tau(synthetic(tau0, 1.0)).tau.value() == doctest::Approx(tau0).epsilon(0.01));
  CHECK(extract_tau(synthetic(tau0, 2.0), 0.5).tau.value() ==
        doctest::Approx(tau0 * std::sqrt(std::log(2.0))).epsilon(0.01));

  DecayCurve flat;
  flat.times_s = {0.0, 1.0, 2.0, 3.0};
  flat.values = {1.0, 0.97, 0.93, 0.9};
  CHECK_THROWS_AS(extract_tau(flat), NoCrossingError);
  DecayCurve single;
  single.times_s = {0.0};
  single.values = {1.0};
  CHECK_THROWS_AS(extract_tau(single), DomainError);
  CHECK_THROWS_AS(extract_tau(synthetic(tau0, 2.0), 1.0), DomainError);
}

TEST_CASE("narrow ion curve fits a gaussian envelope") {
  for (double ratio : {0.01, 0.02, 0.05}) {
    const ScenarioParams sc = at_ratio(ion(), ratio);
    const Quantity lambda = ratio * sc.R;
    const OracleRun run = run_oracle(sc, Interaction::kIon, "tegmark-mt-ion", lambda);
    // Least squares on ln(-ln D) = 2 ln t - 2 ln tau with the slope fixed.
    double sum = 0.0;
    int n = 0;
    for (std::size_t i = 1; i < run.curve.times_s.size(); ++i) {
      const double d = run.curve.values[i];
      if (d < 0.05 || d > 0.95) continue;
      sum += std::log(run.curve.times_s[i]) - 0.5 * std::log(-std::log(d));
      ++n;
    }
    REQUIRE(n >= 5);
    const double fitted = std::exp(sum / n);
    CHECK(fitted == doctest::Approx(tau_ion_narrow_lambda(sc, lambda).tau.value()).epsilon(0.10));
    CHECK(run.curve.regime == Regime::kNarrow);
  }
}

TEST_CASE("oracle deviation grows with lambda/d") {
  for (Interaction inter : {Interaction::kIon, Interaction::kDipole}) {
    const ScenarioParams& base = inter == Interaction::kIon ? ion() : dipole();
    double prev = -1.0;
    for (double ratio : {0.01, 0.02, 0.05}) {
      const ScenarioParams sc = at_ratio(base, ratio);
      const Quantity lambda = ratio * sc.R;
      const double oracle = run_oracle(sc, inter, "", lambda).tau.tau.value();
      const double closed = inter == Interaction::kIon ? tau_ion_narrow_lambda(sc, lambda).tau.value()
                                                       : tau_dipole_narrow(sc).tau.value();
      const double dev = std::fabs(oracle / closed - 1.0);
      CHECK(dev < 0.10);
      CHECK(dev > prev);
      prev = dev;
    }
  }
}
